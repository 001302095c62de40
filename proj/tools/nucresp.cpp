#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "nucresp/config.hpp"
#include "nucresp/entanglement.hpp"
#include "nucresp/gates.hpp"
#include "nucresp/mitigation.hpp"
#include "nucresp/qubitization.hpp"
#include "nucresp/serialize.hpp"
#include "nucresp/triton.hpp"
#include "nucresp/trotter.hpp"

namespace {

using namespace nucresp;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string fmt(std::int64_t v) { return std::to_string(v); }
std::string fmt(int v) { return std::to_string(v); }

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void write_csv(std::ostream& os) const {
    for (std::size_t i = 0; i < header.size(); ++i)
      os << header[i] << (i + 1 < header.size() ? "," : "\n");
    for (const auto& row : rows)
      for (std::size_t i = 0; i < row.size(); ++i)
        os << row[i] << (i + 1 < row.size() ? "," : "\n");
  }

  json to_json() const {
    json arr = json::array();
    for (const auto& row : rows) {
      json obj = json::object();
      for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
      arr.push_back(std::move(obj));
    }
    return arr;
  }
};

void write_table(const RunConfig& cfg, const std::string& name, const Table& t) {
  namespace fs = std::filesystem;
  fs::create_directories(cfg.output_dir);
  const std::string ext = cfg.format == "json" ? ".json" : ".csv";
  const fs::path path = fs::path(cfg.output_dir) / (name + ext);
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  if (cfg.format == "json")
    os << t.to_json().dump(2) << "\n";
  else
    t.write_csv(os);
  std::cout << "wrote " << path.string() << " (" << t.rows.size() << " rows)\n";
}

void write_json_file(const RunConfig& cfg, const std::string& name, const json& j) {
  namespace fs = std::filesystem;
  fs::create_directories(cfg.output_dir);
  const fs::path path = fs::path(cfg.output_dir) / (name + ".json");
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  os << j.dump(2) << "\n";
  std::cout << "wrote " << path.string() << "\n";
}

std::vector<int> parse_range(const std::string& text) {
  std::vector<int> values;
  int lo = 0, hi = 0, step = 1;
  const auto c1 = text.find(':');
  if (c1 == std::string::npos) {
    values.push_back(std::stoi(text));
    return values;
  }
  lo = std::stoi(text.substr(0, c1));
  const auto rest = text.substr(c1 + 1);
  const auto c2 = rest.find(':');
  if (c2 == std::string::npos) {
    hi = std::stoi(rest);
  } else {
    hi = std::stoi(rest.substr(0, c2));
    step = std::stoi(rest.substr(c2 + 1));
  }
  if (step < 1 || hi < lo)
    throw CLI::ValidationError("--A", "range must be lo:hi[:step] with hi >= lo");
  for (int v = lo; v <= hi; v += step) values.push_back(v);
  return values;
}

SplitKind parse_split(const std::string& name, bool order_one) {
  if (name == "alpha") return SplitKind::alpha;
  if (name == "beta") return order_one ? SplitKind::beta : SplitKind::beta_kv;
  if (name == "beta-kv") return SplitKind::beta_kv;
  if (name == "beta-vk") return SplitKind::beta_vk;
  throw CLI::ValidationError("--split", "must be alpha, beta, beta-kv or beta-vk");
}

void resolve_lattice_size(LatticeSpec& spec, std::int64_t M) {
  int nl = static_cast<int>(std::llround(std::pow(static_cast<double>(M),
                                                  1.0 / spec.D)));
  for (int cand : {nl - 1, nl, nl + 1}) {
    if (cand < 1) continue;
    std::int64_t m = 1;
    for (int d = 0; d < spec.D; ++d) m *= cand;
    if (m == M) {
      spec.N_L = cand;
      return;
    }
  }
  throw CLI::ValidationError("--M", "M must be a perfect D-th power of the side length");
}

template <typename F>
void parallel_for(std::size_t count, int jobs, F&& body) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const int workers = std::min<std::size_t>(jobs, count);
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&]() {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
        body(i);
    });
  for (auto& th : pool) th.join();
}

struct CommonOpts {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<std::string> format;
  int jobs = 1;
};

RunConfig make_config(const CommonOpts& opts) {
  RunConfig cfg = opts.config_path.empty() ? RunConfig{} : load_config(opts.config_path);
  if (opts.seed) cfg.seed = *opts.seed;
  if (opts.out_dir) cfg.output_dir = *opts.out_dir;
  if (opts.format) cfg.format = *opts.format;
  apply_env_overrides(cfg);
  return cfg;
}

// ---------------------------------------------------------------- estimate

int cmd_estimate(const CommonOpts& common, const std::string& a_range,
                 std::int64_t M, int D, int nf, const std::string& split_name,
                 int order, const std::string& bound_name, double resolution) {
  RunConfig cfg = make_config(common);
  cfg.lattice.D = D;
  cfg.lattice.N_f = nf;
  resolve_lattice_size(cfg.lattice, M);
  const SplitKind split = parse_split(split_name, order == 1);
  const BoundKind bound =
      bound_name == "commutator" ? BoundKind::commutator : BoundKind::analytic;
  const std::vector<int> As = parse_range(a_range);

  Table t;
  t.header = {"A", "W", "r_base", "r_total_same", "r_total_adaptive"};
  t.rows.resize(As.size());
  parallel_for(As.size(), common.jobs, [&](std::size_t i) {
    LatticeSpec spec = cfg.lattice;
    spec.A = As[i];
    const TrotterPlan plan = qpe_schedule(spec, split, order, bound, resolution);
    t.rows[i] = {fmt(As[i]), fmt(plan.W), fmt(plan.r_base),
                 fmt(plan.r_total_same), fmt(plan.r_total_adaptive)};
  });
  write_table(cfg, "estimate", t);
  return 0;
}

// ------------------------------------------------------------------- gates

int cmd_gates(const CommonOpts& common, const std::string& a_range,
              std::int64_t M, int D, int nf, const std::string& split_name,
              int order, const std::string& bound_name, double resolution,
              bool serial) {
  RunConfig cfg = make_config(common);
  cfg.lattice.D = D;
  cfg.lattice.N_f = nf;
  resolve_lattice_size(cfg.lattice, M);
  const SplitKind split = parse_split(split_name, order == 1);
  const BoundKind bound =
      bound_name == "analytic" ? BoundKind::analytic : BoundKind::commutator;
  const std::vector<int> As = parse_range(a_range);

  Table t;
  t.header = {"A", "cnot_total", "rz_total", "qubits"};
  t.rows.resize(As.size());
  parallel_for(As.size(), common.jobs, [&](std::size_t i) {
    LatticeSpec spec = cfg.lattice;
    spec.A = As[i];
    const TrotterPlan plan = qpe_schedule(spec, split, order, bound, resolution);
    const GateCost total = total_cost(plan, spec.sites());
    const std::int64_t cnot =
        serial ? total.cnot_total() : total.cnot_total_parallel();
    const double rot =
        serial ? total.rotation_units() : total.rotation_units_parallel();
    t.rows[i] = {fmt(As[i]), fmt(cnot), fmt(rot),
                 fmt(spec.modes() + plan.W)};
  });
  write_table(cfg, "gates", t);
  return 0;
}

// ---------------------------------------------------------------- qubitize

int cmd_qubitize(const CommonOpts& common, const std::string& a_range,
                 std::int64_t M, int D, int nf, const std::string& split_name,
                 double resolution) {
  RunConfig cfg = make_config(common);
  cfg.lattice.D = D;
  cfg.lattice.N_f = nf;
  resolve_lattice_size(cfg.lattice, M);
  const SplitKind split = parse_split(split_name, false);
  const std::vector<int> As = parse_range(a_range);

  Table t;
  t.header = {"A", "N_A", "W_q", "cnot_total", "rz_total", "ratio_vs_trotter"};
  t.rows.resize(As.size());
  parallel_for(As.size(), common.jobs, [&](std::size_t i) {
    LatticeSpec spec = cfg.lattice;
    spec.A = As[i];
    const QubitizationPlan plan = qubitization_plan(spec, resolution);
    const double ratio = speedup_ratio(spec, resolution, split);
    t.rows[i] = {fmt(As[i]), fmt(plan.N_A), fmt(plan.W_q),
                 fmt(plan.total.cnot_total()), fmt(plan.total.rz_total()),
                 fmt(ratio)};
  });
  write_table(cfg, "qubitize", t);
  return 0;
}

// ------------------------------------------------------------------ triton

int cmd_triton_groundstate(const CommonOpts& common) {
  RunConfig cfg = make_config(common);
  const auto [e0, psi0] = exact_ground_state(cfg.triton);
  const TrialOptimum plain = optimize_trial(cfg.triton, TrialVariant::plain);
  const TrialOptimum sym = optimize_trial(cfg.triton, TrialVariant::symmetric);
  const TritonObservables gs = contacts(psi0, cfg.triton);

  json out{{"exact", {{"energy", e0},
                      {"C3", gs.C3},
                      {"C2_dyn", gs.C2_dyn},
                      {"C2_sA", gs.C2_sA}}},
           {"trial", {{"energy", plain.energy},
                      {"theta", plain.theta},
                      {"phi", plain.phi}}},
           {"trial_symmetric", {{"energy", sym.energy},
                                {"theta", sym.theta},
                                {"phi", sym.phi}}}};
  write_json_file(cfg, "triton_groundstate", out);
  std::cout << "exact ground state " << fmt(e0) << "\n"
            << "trial state        " << fmt(plain.energy) << "\n"
            << "symmetric trial    " << fmt(sym.energy) << "\n";
  return 0;
}

struct NoiseSpecArg {
  bool enabled = false;
  std::string text;
};

void apply_noise_arg(RunConfig& cfg, const std::string& text) {
  if (text == "defaults" || text.empty()) {
    if (cfg.noise.readout.empty())
      cfg.noise.readout = {ConfusionMatrix{0.03, 0.03}};
    return;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--noise", "expects defaults or k=v[,k=v...]");
    const std::string key = item.substr(0, eq);
    const double value = std::stod(item.substr(eq + 1));
    if (key == "p2") cfg.noise.p2 = value;
    else if (key == "readout") cfg.noise.readout = {ConfusionMatrix{value, value}};
    else if (key == "p0") {
      if (cfg.noise.readout.empty()) cfg.noise.readout = {ConfusionMatrix{}};
      cfg.noise.readout[0].p0 = value;
    } else if (key == "p1") {
      if (cfg.noise.readout.empty()) cfg.noise.readout = {ConfusionMatrix{}};
      cfg.noise.readout[0].p1 = value;
    } else {
      throw CLI::ValidationError("--noise", "unknown noise key " + key);
    }
  }
  if (cfg.noise.readout.empty()) cfg.noise.readout = {ConfusionMatrix{0.0, 0.0}};
}

struct ObservableDef {
  std::string name;
  std::vector<std::uint64_t> bits;
};

double projector_value(const Eigen::VectorXd& probs,
                       const std::vector<std::uint64_t>& bits) {
  double v = 0.0;
  for (auto b : bits) v += probs[static_cast<Eigen::Index>(b)];
  return v;
}

double projector_sigma(const Eigen::VectorXd& sigmas,
                       const std::vector<std::uint64_t>& bits) {
  double v = 0.0;
  for (auto b : bits) v += sigmas[static_cast<Eigen::Index>(b)] *
                           sigmas[static_cast<Eigen::Index>(b)];
  return std::sqrt(v);
}

int cmd_triton_evolve(const CommonOpts& common, double t_max, int points,
                      const std::string& mode_name, int steps,
                      const NoiseSpecArg& noise_arg, std::uint64_t shots,
                      bool mitigate, const std::string& variant_name) {
  RunConfig cfg = make_config(common);
  if (mitigate && !noise_arg.enabled)
    throw CLI::ValidationError("--mitigate", "requires --noise");
  if (noise_arg.enabled && mode_name != "trotter")
    throw CLI::ValidationError("--noise", "noise runs need --mode trotter");
  if (noise_arg.enabled) apply_noise_arg(cfg, noise_arg.text);
  if (points < 1) throw CLI::ValidationError("--points", "needs >= 1");

  const TrialVariant variant = variant_name == "symmetric"
                                   ? TrialVariant::symmetric
                                   : TrialVariant::plain;
  const TrialOptimum opt = optimize_trial(cfg.triton, variant);
  const Circuit trial = trial_circuit(opt.theta, opt.phi, variant);
  const StateVector psi0 = run_pure(trial);

  const std::vector<ObservableDef> observables = {
      {"C3", {MeasuredDistribution::index_of("0000")}},
      {"C2_dyn",
       {MeasuredDistribution::index_of("0101"),
        MeasuredDistribution::index_of("1010"),
        MeasuredDistribution::index_of("1111")}},
      {"C2_sA",
       {MeasuredDistribution::index_of("0001"),
        MeasuredDistribution::index_of("0010"),
        MeasuredDistribution::index_of("0011")}}};

  Table t;
  const bool sampled = noise_arg.enabled;
  if (sampled)
    t.header = {"time", "C3", "C3_err", "C2_dyn", "C2_dyn_err",
                "C2_sA", "C2_sA_err"};
  else
    t.header = {"time", "C3", "C2_dyn", "C2_sA"};
  t.rows.resize(static_cast<std::size_t>(points));
  std::vector<json> reports(static_cast<std::size_t>(points));

  const EvolveMode mode = mode_name == "trotter" ? EvolveMode::trotter(steps)
                                                 : EvolveMode::exact();
  parallel_for(static_cast<std::size_t>(points), common.jobs, [&](std::size_t i) {
    const double time = points == 1 ? 0.0
                                    : t_max * static_cast<double>(i) /
                                          static_cast<double>(points - 1);
    if (!sampled) {
      const StateVector psi = evolve(cfg.triton, psi0, time, mode);
      const TritonObservables obs = contacts(psi);
      t.rows[i] = {fmt(time), fmt(obs.C3), fmt(obs.C2_dyn), fmt(obs.C2_sA)};
      return;
    }

    // noisy run: build the full circuit so the noise model sees every gate
    Circuit circuit(4);
    circuit.append(trial);
    if (time > 0.0) {
      const Circuit step = trotter_step_circuit(time / steps, cfg.triton);
      for (int s = 0; s < steps; ++s) circuit.append(step);
    }

    const std::vector<int> ks = mitigate ? std::vector<int>{1, 3, 5, 7}
                                         : std::vector<int>{1};
    std::vector<MeasuredDistribution> corrected;
    int run_errors = 0;
    std::vector<std::vector<NoisePoint>> pts(observables.size());
    for (std::size_t ki = 0; ki < ks.size(); ++ki) {
      NoiseModel noise = cfg.noise;
      noise.amplification = ks[ki];
      const DensityMatrix rho = run_noisy(circuit, noise);
      auto rng = cfg.rng_for(i * 16 + ki);
      const MeasuredDistribution raw =
          sample(rho, shots, rng, &noise.readout);
      const ReadoutCorrection corr = correct_readout(raw, noise.readout);
      run_errors += corr.error_count;
      corrected.push_back(corr.corrected);
      for (std::size_t o = 0; o < observables.size(); ++o)
        pts[o].push_back(
            {ks[ki], projector_value(corr.corrected.probabilities, observables[o].bits),
             projector_sigma(corr.corrected.sigmas, observables[o].bits)});
    }

    if (!mitigate) {
      std::vector<std::string> row{fmt(time)};
      for (std::size_t o = 0; o < observables.size(); ++o) {
        row.push_back(fmt(pts[o][0].value));
        row.push_back(fmt(pts[o][0].sigma));
      }
      t.rows[i] = std::move(row);
      return;
    }

    const DecoherenceCheck dec = decoherence_check(corrected);
    json point_report{{"time", time}, {"decohered", dec.decohered}};
    std::vector<std::string> row{fmt(time)};
    for (std::size_t o = 0; o < observables.size(); ++o) {
      const double depol = static_cast<double>(observables[o].bits.size()) / 16.0;
      const std::vector<ExtrapolationResult> results = {
          richardson(pts[o]), polynomial(pts[o]), exponential(pts[o], depol)};
      MitigationReport rep = combine(results, run_errors + dec.error_count);
      rep.decohered = dec.decohered;
      point_report[observables[o].name] = to_json(rep);
      row.push_back(fmt(rep.ok ? rep.value : std::nan("")));
      row.push_back(fmt(rep.ok ? rep.sigma : std::nan("")));
    }
    t.rows[i] = std::move(row);
    reports[i] = std::move(point_report);
  });

  write_table(cfg, "triton_evolve", t);
  if (mitigate) {
    json all = json::array();
    for (auto& r : reports) all.push_back(std::move(r));
    write_json_file(cfg, "triton_evolve_mitigation", all);
  }
  return 0;
}

int cmd_triton_entanglement(const CommonOpts& common, double t_max, int points,
                            const std::string& variant_name) {
  RunConfig cfg = make_config(common);
  if (points < 1) throw CLI::ValidationError("--points", "needs >= 1");
  const TrialVariant variant = variant_name == "symmetric"
                                   ? TrialVariant::symmetric
                                   : TrialVariant::plain;
  const TrialOptimum opt = optimize_trial(cfg.triton, variant);
  const StateVector psi0 = run_pure(trial_circuit(opt.theta, opt.phi, variant));

  Table t;
  t.header = {"time", "S_q", "S_01", "S_03", "C_01", "C_03", "EF_03"};
  t.rows.resize(static_cast<std::size_t>(points));
  parallel_for(static_cast<std::size_t>(points), common.jobs, [&](std::size_t i) {
    const double time = points == 1 ? 0.0
                                    : t_max * static_cast<double>(i) /
                                          static_cast<double>(points - 1);
    const StateVector psi = evolve(cfg.triton, psi0, time, EvolveMode::exact());
    const double sq = entropy(partial_trace(psi, {0}));
    const double s01 = entropy(partial_trace(psi, {0, 1}));
    const double s03 = entropy(partial_trace(psi, {0, 3}));
    const double c01 = concurrence(partial_trace(psi, {0, 1}));
    const double c03 = concurrence(partial_trace(psi, {0, 3}));
    t.rows[i] = {fmt(time), fmt(sq),  fmt(s01), fmt(s03),
                 fmt(c01),  fmt(c03), fmt(entanglement_of_formation(c03))};
  });
  write_table(cfg, "triton_entanglement", t);
  return 0;
}

// ---------------------------------------------------------------- mitigate

int cmd_mitigate(const CommonOpts& common, const std::string& input,
                 double depolarized, const std::string& filter_wanted,
                 const std::string& bits_arg) {
  RunConfig cfg = make_config(common);
  std::ifstream in(input);
  if (!in) throw std::runtime_error("cannot open " + input);
  json runs = json::parse(in);
  validate_runs_json(runs);

  std::vector<std::uint64_t> bits;
  {
    std::stringstream ss(bits_arg);
    std::string item;
    while (std::getline(ss, item, ','))
      bits.push_back(MeasuredDistribution::index_of(item));
  }

  const std::vector<ConfusionMatrix> calibration =
      cfg.noise.readout.empty() ? std::vector<ConfusionMatrix>{ConfusionMatrix{}}
                                : cfg.noise.readout;

  std::vector<MeasuredDistribution> corrected;
  std::vector<NoisePoint> pts;
  int run_errors = 0;
  for (const auto& run : runs) {
    const MeasuredDistribution dist =
        distribution_from_json(run.at("distribution"));
    const ReadoutCorrection corr = correct_readout(dist, calibration);
    run_errors += corr.error_count;
    corrected.push_back(corr.corrected);
    pts.push_back({run.at("k").get<int>(),
                   projector_value(corr.corrected.probabilities, bits),
                   projector_sigma(corr.corrected.sigmas, bits)});
  }
  const DecoherenceCheck dec = decoherence_check(corrected);
  const std::vector<ExtrapolationResult> results = {
      richardson(pts), polynomial(pts), exponential(pts, depolarized)};
  MitigationReport rep = combine(results, run_errors + dec.error_count);
  rep.decohered = dec.decohered;

  json out = to_json(rep);
  out["requested_filter"] = filter_wanted;
  const int wanted = filter_wanted == "A0" ? 0 : filter_wanted == "A1" ? 1 : 2;
  out["accepted"] = rep.ok && rep.error_count <= wanted;
  write_json_file(cfg, "mitigate", out);
  std::cout << "combined " << (rep.ok ? fmt(rep.value) : "REJECTED")
            << (rep.ok ? " +/- " + fmt(rep.sigma) : "")
            << "  filter " << filter_name(rep.filter) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resource estimates and a desk-scale simulator for "
               "neutrino-nucleus response on quantum hardware"};
  app.require_subcommand(1);

  CommonOpts common;
  app.add_option("--config", common.config_path, "key = value config file");
  std::uint64_t seed_opt = 0;
  auto* seed_flag = app.add_option("--seed", seed_opt, "global PRNG seed");
  std::string out_opt, format_opt;
  auto* out_flag = app.add_option("--out", out_opt, "output directory");
  auto* format_flag =
      app.add_option("--format", format_opt, "csv or json")
          ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--jobs", common.jobs, "sweep parallelism")->default_val(1);

  // estimate
  auto* est = app.add_subcommand("estimate", "Trotter step counts over an A sweep");
  std::string est_A = "4:100";
  std::int64_t est_M = 1000;
  int est_D = 3, est_Nf = 4, est_order = 2;
  std::string est_split = "beta-kv", est_bound = "analytic";
  double est_res = 10.0;
  est->add_option("--A", est_A, "nucleon number or range lo:hi[:step]");
  est->add_option("--M", est_M, "lattice sites (must be N_L^D)");
  est->add_option("--D", est_D, "spatial dimension");
  est->add_option("--Nf", est_Nf, "fermion species");
  est->add_option("--split", est_split, "alpha, beta, beta-kv or beta-vk");
  est->add_option("--order", est_order, "1, 2 or 4")->check(CLI::IsMember({1, 2, 4}));
  est->add_option("--bound", est_bound, "analytic or commutator")
      ->check(CLI::IsMember({"analytic", "commutator"}));
  est->add_option("--resolution", est_res, "frequency resolution [MeV]");

  // gates
  auto* gat = app.add_subcommand("gates", "gate totals of the QPE kernel");
  std::string gat_A = "40";
  std::int64_t gat_M = 1000;
  int gat_D = 3, gat_Nf = 4, gat_order = 2;
  std::string gat_split = "beta-kv", gat_bound = "commutator";
  double gat_res = 10.0;
  bool gat_serial = false, gat_parallel = false;
  gat->add_option("--A", gat_A, "nucleon number or range");
  gat->add_option("--M", gat_M, "lattice sites");
  gat->add_option("--D", gat_D, "spatial dimension");
  gat->add_option("--Nf", gat_Nf, "fermion species");
  gat->add_option("--split", gat_split, "alpha, beta, beta-kv or beta-vk");
  gat->add_option("--order", gat_order, "1, 2 or 4")->check(CLI::IsMember({1, 2, 4}));
  gat->add_option("--bound", gat_bound, "analytic or commutator")
      ->check(CLI::IsMember({"analytic", "commutator"}));
  gat->add_option("--resolution", gat_res, "frequency resolution [MeV]");
  gat->add_flag("--serial", gat_serial, "serial gate accounting");
  gat->add_flag("--parallel", gat_parallel, "parallel gate accounting (default)");

  // qubitize
  auto* qub = app.add_subcommand("qubitize", "quantum-walk cost comparison");
  std::string qub_A = "40";
  std::int64_t qub_M = 1000;
  int qub_D = 3, qub_Nf = 4;
  std::string qub_split = "beta-kv";
  double qub_res = 10.0;
  qub->add_option("--A", qub_A, "nucleon number or range");
  qub->add_option("--M", qub_M, "lattice sites");
  qub->add_option("--D", qub_D, "spatial dimension");
  qub->add_option("--Nf", qub_Nf, "fermion species");
  qub->add_option("--split", qub_split, "trotter split for the ratio column");
  qub->add_option("--resolution", qub_res, "frequency resolution [MeV]");

  // triton
  auto* tri = app.add_subcommand("triton", "desk-scale toy model");
  tri->require_subcommand(1);
  auto* tri_gs = tri->add_subcommand("groundstate", "exact and trial energies");
  auto* tri_ev = tri->add_subcommand("evolve", "contact densities in time");
  double ev_tmax = 0.6;
  int ev_points = 61, ev_steps = 1;
  std::string ev_mode = "exact", ev_variant = "plain";
  NoiseSpecArg ev_noise;
  std::uint64_t ev_shots = 8192;
  bool ev_mitigate = false;
  tri_ev->add_option("--t-max", ev_tmax, "final time");
  tri_ev->add_option("--points", ev_points, "grid points");
  tri_ev->add_option("--mode", ev_mode, "exact or trotter")
      ->check(CLI::IsMember({"exact", "trotter"}));
  tri_ev->add_option("--steps", ev_steps, "Trotter steps per point");
  auto* noise_opt = tri_ev->add_option("--noise", ev_noise.text,
                                       "defaults or p2=..,readout=..");
  noise_opt->expected(0, 1);
  tri_ev->add_option("--shots", ev_shots, "shots per noisy run");
  tri_ev->add_flag("--mitigate", ev_mitigate, "run the extrapolation pipeline");
  tri_ev->add_option("--variant", ev_variant, "plain or symmetric")
      ->check(CLI::IsMember({"plain", "symmetric"}));
  auto* tri_en = tri->add_subcommand("entanglement", "entropies and concurrence");
  double en_tmax = 0.6;
  int en_points = 61;
  std::string en_variant = "plain";
  tri_en->add_option("--t-max", en_tmax, "final time");
  tri_en->add_option("--points", en_points, "grid points");
  tri_en->add_option("--variant", en_variant, "plain or symmetric")
      ->check(CLI::IsMember({"plain", "symmetric"}));

  // mitigate
  auto* mit = app.add_subcommand("mitigate", "extrapolate recorded runs");
  std::string mit_input, mit_filter = "A2", mit_bits = "0000";
  double mit_depol = 1.0 / 16.0;
  mit->add_option("--input", mit_input, "runs.json")->required();
  mit->add_option("--depolarized", mit_depol, "observable value on I/2^n");
  mit->add_option("--filter", mit_filter, "A0, A1 or A2")
      ->check(CLI::IsMember({"A0", "A1", "A2"}));
  mit->add_option("--bits", mit_bits, "comma-separated projector bitstrings");

  try {
    app.parse(argc, argv);
    if (*seed_flag) common.seed = seed_opt;
    if (*out_flag) common.out_dir = out_opt;
    if (*format_flag) common.format = format_opt;
    ev_noise.enabled = noise_opt->count() > 0;

    if (*est)
      return cmd_estimate(common, est_A, est_M, est_D, est_Nf, est_split,
                          est_order, est_bound, est_res);
    if (*gat)
      return cmd_gates(common, gat_A, gat_M, gat_D, gat_Nf, gat_split,
                       gat_order, gat_bound, gat_res, gat_serial && !gat_parallel);
    if (*qub)
      return cmd_qubitize(common, qub_A, qub_M, qub_D, qub_Nf, qub_split, qub_res);
    if (*tri_gs) return cmd_triton_groundstate(common);
    if (*tri_ev)
      return cmd_triton_evolve(common, ev_tmax, ev_points, ev_mode, ev_steps,
                               ev_noise, ev_shots, ev_mitigate, ev_variant);
    if (*tri_en)
      return cmd_triton_entanglement(common, en_tmax, en_points, en_variant);
    if (*mit)
      return cmd_mitigate(common, mit_input, mit_depol, mit_filter, mit_bits);
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
}
