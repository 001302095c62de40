#pragma once

#include <vector>

#include <Eigen/Dense>

#include "nucresp/simulator.hpp"

namespace nucresp {

/// Reduced density matrix on the kept qubits (a nonempty proper subset),
/// tracing out the rest. Kept qubits stay in their original relative order.
Eigen::MatrixXcd partial_trace(const Eigen::MatrixXcd& rho, std::size_t n,
                               const std::vector<std::size_t>& keep);
Eigen::MatrixXcd partial_trace(const StateVector& psi,
                               const std::vector<std::size_t>& keep);

/// Von Neumann entropy -sum lambda ln lambda, in nats; 0 ln 0 := 0.
/// Eigenvalues below -1e-9 are rejected.
double entropy(const Eigen::MatrixXcd& rho);

/// Two-qubit concurrence: C = max{0, l0 - l1 - l2 - l3} where l_i are the
/// decreasing square roots of the eigenvalues of rho (Y x Y) rho* (Y x Y),
/// evaluated through the Hermitian form sqrt(rho) M sqrt(rho).
double concurrence(const Eigen::MatrixXcd& rho2);

/// Entanglement of formation in bits: h((1 + sqrt(1 - C^2)) / 2) with the
/// binary entropy h; monotone increasing on C in [0, 1].
double entanglement_of_formation(double concurrence_value);

}  // namespace nucresp
