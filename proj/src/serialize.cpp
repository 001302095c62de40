#include "nucresp/serialize.hpp"

#include <stdexcept>

namespace nucresp {

json to_json(const PauliSum& sum) {
  json out = json::array();
  for (const auto& t : sum.terms())
    out.push_back({{"coeff", t.coeff}, {"pauli", t.op.label()}});
  return out;
}

PauliSum pauli_sum_from_json(const json& j) {
  validate_pauli_sum_json(j);
  PauliSum sum;
  for (const auto& term : j)
    sum.add(term.at("coeff").get<double>(),
            PauliString::from_label(term.at("pauli").get<std::string>()));
  return sum;
}

json to_json(const Circuit& circuit) {
  json gates = json::array();
  for (const auto& g : circuit.gates()) {
    json entry{{"kind", gate_name(g.kind)}, {"qubits", g.qubits}};
    if (is_rotation(g.kind)) entry["angle"] = g.angle;
    gates.push_back(std::move(entry));
  }
  return json{{"n", circuit.num_qubits()}, {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const json& j) {
  validate_circuit_json(j);
  Circuit c(j.at("n").get<std::size_t>());
  for (const auto& g : j.at("gates")) {
    Gate gate;
    gate.kind = gate_kind_from_name(g.at("kind").get<std::string>());
    gate.qubits = g.at("qubits").get<std::vector<std::size_t>>();
    gate.angle = g.value("angle", 0.0);
    c.append(std::move(gate));
  }
  return c;
}

json to_json(const MeasuredDistribution& dist) {
  json out{{"shots", dist.shots}};
  if (!dist.counts.empty()) {
    json counts = json::object();
    for (std::size_t i = 0; i < dist.counts.size(); ++i)
      if (dist.counts[i] > 0)
        counts[MeasuredDistribution::bitstring(dist.n, i)] = dist.counts[i];
    out["n"] = dist.n;
    out["counts"] = std::move(counts);
  } else {
    out["n"] = dist.n;
    out["probabilities"] = std::vector<double>(
        dist.probabilities.data(),
        dist.probabilities.data() + dist.probabilities.size());
    out["sigmas"] = std::vector<double>(dist.sigmas.data(),
                                        dist.sigmas.data() + dist.sigmas.size());
  }
  return out;
}

MeasuredDistribution distribution_from_json(const json& j) {
  validate_distribution_json(j);
  const auto& counts_obj = j.at("counts");
  std::size_t n = 0;
  if (j.contains("n")) {
    n = j.at("n").get<std::size_t>();
  } else {
    n = counts_obj.begin().key().size();
  }
  std::vector<std::uint64_t> counts(std::size_t{1} << n, 0);
  for (auto it = counts_obj.begin(); it != counts_obj.end(); ++it) {
    const std::string& bits = it.key();
    if (bits.size() != n)
      throw std::invalid_argument("distribution: inconsistent bitstring length");
    counts[MeasuredDistribution::index_of(bits)] = it.value().get<std::uint64_t>();
  }
  return MeasuredDistribution::from_counts(n, std::move(counts));
}

json to_json(const NormBounds& nb) {
  return json{{"K_abs", nb.K_abs},     {"K_phys", nb.K_phys},
              {"V_abs", nb.V_abs},     {"V2_phys", nb.V2_phys},
              {"V3_phys", nb.V3_phys}, {"V_phys", nb.V_phys},
              {"deltaH", nb.deltaH},   {"deltaH_loose", nb.deltaH_loose}};
}

json to_json(const ExtrapolationResult& r) {
  json out{{"strategy", strategy_name(r.strategy)},
           {"status", r.ok ? "OK" : "FAILED"},
           {"error_count", r.error_count},
           {"used_all_points", r.used_all_points}};
  if (r.ok) {
    out["value"] = r.value;
    out["sigma"] = r.sigma;
    out["order_used"] = r.order_used;
  }
  return out;
}

json to_json(const MitigationReport& rep) {
  json strategies = json::array();
  for (const auto& r : rep.strategies) strategies.push_back(to_json(r));
  json out{{"strategies", std::move(strategies)},
           {"error_count", rep.error_count},
           {"filter_level", filter_name(rep.filter)},
           {"decohered", rep.decohered}};
  if (rep.ok) {
    out["value"] = rep.value;
    out["sigma"] = rep.sigma;
    out["source"] = rep.source;
  } else {
    out["status"] = "REJECTED";
  }
  return out;
}

namespace {
[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("schema violation: " + what);
}
}  // namespace

void validate_pauli_sum_json(const json& j) {
  if (!j.is_array()) fail("pauli sum must be an array");
  std::size_t n = 0;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("pauli"))
      fail("pauli term needs coeff and pauli");
    if (!t.at("coeff").is_number()) fail("coeff must be a number");
    if (!t.at("pauli").is_string()) fail("pauli must be a string");
    const auto label = t.at("pauli").get<std::string>();
    if (n == 0) n = label.size();
    if (label.size() != n) fail("pauli labels must share one length");
    for (char c : label)
      if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
        fail("pauli label letters must be I, X, Y or Z");
  }
}

void validate_circuit_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("gates"))
    fail("circuit needs n and gates");
  if (!j.at("n").is_number_unsigned()) fail("n must be unsigned");
  if (!j.at("gates").is_array()) fail("gates must be an array");
  for (const auto& g : j.at("gates")) {
    if (!g.is_object() || !g.contains("kind") || !g.contains("qubits"))
      fail("gate needs kind and qubits");
    gate_kind_from_name(g.at("kind").get<std::string>());
    if (!g.at("qubits").is_array() || g.at("qubits").empty() ||
        g.at("qubits").size() > 2)
      fail("gate qubits must hold 1 or 2 indices");
  }
}

void validate_distribution_json(const json& j) {
  if (!j.is_object() || !j.contains("shots") || !j.contains("counts"))
    fail("distribution needs shots and counts");
  if (!j.at("shots").is_number_unsigned()) fail("shots must be unsigned");
  if (!j.at("counts").is_object()) fail("counts must be an object");
  std::uint64_t total = 0;
  for (auto it = j.at("counts").begin(); it != j.at("counts").end(); ++it) {
    for (char c : it.key())
      if (c != '0' && c != '1') fail("counts keys must be bitstrings");
    if (!it.value().is_number_unsigned()) fail("counts must be unsigned");
    total += it.value().get<std::uint64_t>();
  }
  if (total != j.at("shots").get<std::uint64_t>())
    fail("counts must sum to shots");
}

void validate_runs_json(const json& j) {
  if (!j.is_array() || j.empty()) fail("runs must be a nonempty array");
  for (const auto& run : j) {
    if (!run.is_object() || !run.contains("k") || !run.contains("distribution"))
      fail("run needs k and distribution");
    if (!run.at("k").is_number_integer() || run.at("k").get<int>() < 1 ||
        run.at("k").get<int>() % 2 == 0)
      fail("k must be an odd positive integer");
    validate_distribution_json(run.at("distribution"));
  }
}

}  // namespace nucresp
