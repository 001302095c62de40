#pragma once

#include <utility>

#include <Eigen/Dense>

#include "nucresp/circuit.hpp"
#include "nucresp/pauli.hpp"
#include "nucresp/simulator.hpp"

namespace nucresp {

/// Two dynamical nucleons plus one static nucleon on a periodic 2x2 lattice,
/// first-quantized into 4 qubits (2 per particle; particle A on qubits 0,1
/// and B on qubits 2,3; site |1> = |00>, |2> = |01>, |3> = |10>, |4> = |11>
/// with the static nucleon on site 1). V = -4U enables the reduced
/// Hamiltonian and the compact Trotter-step circuit.
struct TritonParams {
  double t = 1.0;
  double U = -7.0;
  double V = 28.0;

  bool reduced() const { return std::abs(V + 4.0 * U) < 1e-12; }
};

struct TritonObservables {
  double C3;      // all three nucleons on the special site
  double C2_dyn;  // dynamical pair together away from the special site
  double C2_sA;   // tagged particle on the special site, partner elsewhere
  double energy;
};

/// 16x16 Hamiltonian from the projector construction: hopping
/// -2t sum_k X_k plus the diagonal assembled from on-site projectors.
/// Includes the 8t + U constant convention of the diagonal bookkeeping.
Eigen::MatrixXd triton_hamiltonian(const TritonParams& params);

/// The same operator as explicit Pauli strings; only valid when V = -4U.
PauliSum triton_reduced_terms(const TritonParams& params);

/// Lowest eigenpair by dense symmetric diagonalization; the eigenvector sign
/// is fixed so its largest-magnitude amplitude is positive.
std::pair<double, StateVector> exact_ground_state(const TritonParams& params);

enum class TrialVariant { plain, symmetric };

/// Two-parameter real-amplitude trial circuit: an Ry(theta) layer, the CZ
/// pairs (0,3) and (1,2), an Ry(phi) layer (qubits 2,3 for the plain form,
/// phi/2 on all four for the symmetric one), and the CZ pairs again.
Circuit trial_circuit(double theta, double phi, TrialVariant variant);

struct TrialOptimum {
  double theta;
  double phi;
  double energy;
};

/// Deterministic grid scan over [0, 2pi)^2 followed by local refinement of
/// the trial energy until the gradient norm drops below 1e-8.
TrialOptimum optimize_trial(const TritonParams& params, TrialVariant variant);

/// One first-order Trotter step: the diagonal factor acts first and the
/// hopping layer closes, so the circuit equals
/// exp(-i tau K_hop) exp(-i tau V_diag) up to the dropped constant phase.
/// With V = -4U this is the compact 10-rotation / 10-CNOT form; otherwise a
/// generic staircase for the full diagonal is emitted (15 rotations + 4 Rx,
/// 14 CNOT).
Circuit trotter_step_circuit(double tau, const TritonParams& params);

struct EvolveMode {
  enum class Kind { exact, trotter } kind = Kind::exact;
  int steps = 1;

  static EvolveMode exact() { return {Kind::exact, 0}; }
  static EvolveMode trotter(int steps) { return {Kind::trotter, steps}; }
};

StateVector evolve(const TritonParams& params, const StateVector& state,
                   double time, const EvolveMode& mode);

/// Contact probabilities of a 4-qubit state; `energy` is filled only by the
/// overload that knows the model parameters.
TritonObservables contacts(const StateVector& state);
TritonObservables contacts(const StateVector& state, const TritonParams& params);

double triton_energy(const TritonParams& params, const StateVector& state);

}  // namespace nucresp
