#pragma once

#include <json.hpp>

#include "nucresp/circuit.hpp"
#include "nucresp/lattice.hpp"
#include "nucresp/mitigation.hpp"
#include "nucresp/pauli.hpp"
#include "nucresp/simulator.hpp"

namespace nucresp {

using json = nlohmann::ordered_json;

/// [{"coeff": real, "pauli": "XZIY"}, ...] with qubit 0 leftmost.
json to_json(const PauliSum& sum);
PauliSum pauli_sum_from_json(const json& j);

/// {"n": int, "gates": [{"kind": str, "qubits": [...], "angle": real?}]}.
json to_json(const Circuit& circuit);
Circuit circuit_from_json(const json& j);

/// {"shots": int, "counts": {"0000": int, ...}}; corrected distributions
/// serialize probabilities and sigmas instead of counts.
json to_json(const MeasuredDistribution& dist);
MeasuredDistribution distribution_from_json(const json& j);

json to_json(const NormBounds& nb);
json to_json(const ExtrapolationResult& r);
json to_json(const MitigationReport& rep);

/// Structural checks mirroring the schemas shipped under schemas/.
void validate_pauli_sum_json(const json& j);
void validate_circuit_json(const json& j);
void validate_distribution_json(const json& j);
void validate_runs_json(const json& j);

}  // namespace nucresp
