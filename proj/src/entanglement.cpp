#include "nucresp/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace nucresp {

namespace {
// scatter the bits of `sub` (over k kept or traced positions) into an
// n-qubit index according to `positions` (qubit 0 = most significant bit)
std::uint64_t scatter(std::uint64_t sub, const std::vector<std::size_t>& positions,
                      std::size_t n) {
  std::uint64_t out = 0;
  const std::size_t k = positions.size();
  for (std::size_t b = 0; b < k; ++b)
    if (sub & (std::uint64_t{1} << (k - 1 - b)))
      out |= std::uint64_t{1} << (n - 1 - positions[b]);
  return out;
}
}  // namespace

Eigen::MatrixXcd partial_trace(const Eigen::MatrixXcd& rho, std::size_t n,
                               const std::vector<std::size_t>& keep) {
  if (keep.empty() || keep.size() >= n)
    throw std::invalid_argument("partial_trace: keep must be a nonempty proper subset");
  std::vector<bool> kept(n, false);
  for (std::size_t q : keep) {
    if (q >= n) throw std::out_of_range("partial_trace: qubit out of range");
    if (kept[q]) throw std::invalid_argument("partial_trace: duplicate qubit");
    kept[q] = true;
  }
  std::vector<std::size_t> keep_sorted(keep.begin(), keep.end());
  std::sort(keep_sorted.begin(), keep_sorted.end());
  std::vector<std::size_t> traced;
  for (std::size_t q = 0; q < n; ++q)
    if (!kept[q]) traced.push_back(q);

  const std::size_t dk = std::size_t{1} << keep_sorted.size();
  const std::size_t dt = std::size_t{1} << traced.size();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dk, dk);
  for (std::uint64_t r = 0; r < dk; ++r) {
    const std::uint64_t rbase = scatter(r, keep_sorted, n);
    for (std::uint64_t c = 0; c < dk; ++c) {
      const std::uint64_t cbase = scatter(c, keep_sorted, n);
      std::complex<double> acc = 0.0;
      for (std::uint64_t e = 0; e < dt; ++e) {
        const std::uint64_t env = scatter(e, traced, n);
        acc += rho(rbase | env, cbase | env);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

Eigen::MatrixXcd partial_trace(const StateVector& psi,
                               const std::vector<std::size_t>& keep) {
  return partial_trace(psi.amplitudes * psi.amplitudes.adjoint(), psi.n, keep);
}

double entropy(const Eigen::MatrixXcd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double lam = es.eigenvalues()[i];
    if (lam < -1e-9)
      throw std::runtime_error("entropy: eigenvalue below tolerance");
    if (lam > 0.0) s -= lam * std::log(lam);
  }
  return s;
}

double concurrence(const Eigen::MatrixXcd& rho2) {
  if (rho2.rows() != 4 || rho2.cols() != 4)
    throw std::invalid_argument("concurrence: needs a 4x4 density matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho2);
  if (es.eigenvalues().minCoeff() < -1e-9)
    throw std::runtime_error("concurrence: input is not positive semidefinite");
  Eigen::VectorXd clipped = es.eigenvalues().cwiseMax(0.0);
  const Eigen::MatrixXcd sqrt_rho = es.eigenvectors() *
                                    clipped.cwiseSqrt().asDiagonal() *
                                    es.eigenvectors().adjoint();
  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  // same spectrum as rho (YxY) rho* (YxY) but through a Hermitian PSD form
  const Eigen::MatrixXcd m =
      sqrt_rho * yy * rho2.conjugate() * yy * sqrt_rho;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ms(m, Eigen::EigenvaluesOnly);
  std::array<double, 4> lam{};
  for (int i = 0; i < 4; ++i)
    lam[static_cast<std::size_t>(i)] = std::sqrt(std::max(0.0, ms.eigenvalues()[i]));
  std::sort(lam.begin(), lam.end(), std::greater<>());
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

double entanglement_of_formation(double concurrence_value) {
  if (concurrence_value < -1e-12 || concurrence_value > 1.0 + 1e-12)
    throw std::invalid_argument("entanglement_of_formation: C must lie in [0, 1]");
  const double c = std::clamp(concurrence_value, 0.0, 1.0);
  const double x = (1.0 + std::sqrt(1.0 - c * c)) / 2.0;
  const auto h2 = [](double p) {
    double s = 0.0;
    if (p > 0.0) s -= p * std::log2(p);
    if (p < 1.0) s -= (1.0 - p) * std::log2(1.0 - p);
    return s;
  };
  return h2(x);
}

}  // namespace nucresp
