#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "nucresp/circuit.hpp"
#include "nucresp/pauli.hpp"

namespace nucresp {

/// Basis convention used throughout: qubit 0 is the most significant bit of
/// the amplitude index, so the bitstring "0101" on four qubits addresses
/// amplitude 5 and the leftmost character always refers to qubit 0.
struct StateVector {
  std::size_t n = 0;
  Eigen::VectorXcd amplitudes;

  static StateVector zero(std::size_t n);
  static StateVector basis(std::size_t n, std::uint64_t index);
  double norm() const { return amplitudes.norm(); }
};

struct DensityMatrix {
  std::size_t n = 0;
  Eigen::MatrixXcd rho;

  static DensityMatrix from_state(const StateVector& psi);
  double trace_real() const { return rho.trace().real(); }
  /// Hermitian to 1e-10, unit trace to 1e-10, eigenvalues >= -1e-9.
  void validate() const;
};

/// Per-qubit readout misclassification: p0 = P(read 1 | prepared 0),
/// p1 = P(read 0 | prepared 1). Both must stay below 1/2 so the confusion
/// matrix is invertible.
struct ConfusionMatrix {
  double p0 = 0.0;
  double p1 = 0.0;

  Eigen::Matrix2d matrix() const;
  Eigen::Matrix2d inverse() const;
  void validate() const;
};

/// Two-qubit depolarizing noise after every CNOT/CZ/SWAP, per-qubit readout
/// confusion, and odd noise amplification by gate folding (each two-qubit
/// gate becomes 2k-1 copies, which leaves the ideal unitary unchanged).
struct NoiseModel {
  double p2 = 0.02;
  std::vector<ConfusionMatrix> readout;  // one per qubit, or one broadcast
  int amplification = 1;

  ConfusionMatrix readout_for(std::size_t q) const;
  void validate() const;
};

/// Shot histogram over all 2^n bitstrings with derived probabilities and
/// binomial standard errors. Readout-corrected distributions carry
/// non-integer "probabilities" and keep shots for the error model.
struct MeasuredDistribution {
  std::size_t n = 0;
  std::uint64_t shots = 0;
  std::vector<std::uint64_t> counts;  // empty for corrected distributions
  Eigen::VectorXd probabilities;
  Eigen::VectorXd sigmas;

  static MeasuredDistribution from_counts(std::size_t n,
                                          std::vector<std::uint64_t> counts);
  static std::string bitstring(std::size_t n, std::uint64_t index);
  static std::uint64_t index_of(const std::string& bits);
};

/// Apply the circuit to the state by exact unitary action.
StateVector run_pure(const Circuit& circuit, const StateVector& initial);
StateVector run_pure(const Circuit& circuit);  // from |0..0>

/// Dense unitary of the circuit (n limited by kDenseLimit).
Eigen::MatrixXcd circuit_unitary(const Circuit& circuit);

/// Density-matrix evolution under the noise model, starting from |0..0> or
/// the given state. Folding is applied before noise insertion.
DensityMatrix run_noisy(const Circuit& circuit, const NoiseModel& noise);
DensityMatrix run_noisy(const Circuit& circuit, const NoiseModel& noise,
                        const StateVector& initial);

/// Multinomial sampling from the diagonal; optional per-qubit readout
/// confusion is applied to the probability vector before sampling. The
/// engine is caller-seeded for reproducibility.
MeasuredDistribution sample(const StateVector& psi, std::uint64_t shots,
                            std::mt19937_64& rng,
                            const std::vector<ConfusionMatrix>* readout = nullptr);
MeasuredDistribution sample(const DensityMatrix& rho, std::uint64_t shots,
                            std::mt19937_64& rng,
                            const std::vector<ConfusionMatrix>* readout = nullptr);

double expectation(const StateVector& psi, const PauliSum& observable);
double expectation(const StateVector& psi, const Eigen::MatrixXcd& observable);
double expectation(const DensityMatrix& rho, const Eigen::MatrixXcd& observable);

/// Smallest Frobenius distance between a and e^{i phi} b over phases phi.
double global_phase_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace nucresp
