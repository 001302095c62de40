#pragma once

#include <complex>
#include <random>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SVD>

// Test-side oracles, independent of the library implementation paths they
// check: dense Pauli matrices by explicit Kronecker products, Hermitian
// matrix exponentials by eigendecomposition, spectral norms by SVD.
namespace oracle {

inline Eigen::Matrix2cd pauli_matrix(char letter) {
  const std::complex<double> i{0.0, 1.0};
  Eigen::Matrix2cd m;
  switch (letter) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli_matrix: bad letter");
  }
  return m;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  return out;
}

// label with qubit 0 leftmost, matching the library convention
inline Eigen::MatrixXcd dense_pauli(const std::string& label) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (char c : label) m = kron(m, pauli_matrix(c));
  return m;
}

// exp(-i scale H) for Hermitian H
inline Eigen::MatrixXcd expm_i(const Eigen::MatrixXcd& h, double scale) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  const std::complex<double> i{0.0, 1.0};
  Eigen::VectorXcd phases(es.eigenvalues().size());
  for (Eigen::Index k = 0; k < phases.size(); ++k)
    phases[k] = std::exp(-i * scale * es.eigenvalues()[k]);
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

inline double spectral_norm(const Eigen::MatrixXcd& m) {
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues()(0);
}

// largest |entry| of a - e^{i phi} b over the optimal global phase
inline double phase_dist(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  const std::complex<double> tr = (b.adjoint() * a).trace();
  const std::complex<double> ph = std::abs(tr) < 1e-14 ? 1.0 : tr / std::abs(tr);
  return (a - ph * b).cwiseAbs().maxCoeff();
}

}  // namespace oracle
