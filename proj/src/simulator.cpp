#include "nucresp/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace nucresp {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};

std::complex<double> i_power(std::size_t e) {
  switch (e % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

Eigen::Matrix2cd single_qubit_matrix(const Gate& g) {
  Eigen::Matrix2cd m;
  switch (g.kind) {
    case GateKind::RX: {
      const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
      m << c, -kI * s, -kI * s, c;
      return m;
    }
    case GateKind::RY: {
      const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
      m << c, -s, s, c;
      return m;
    }
    case GateKind::RZ: {
      m << std::exp(-kI * (g.angle / 2.0)), 0.0, 0.0, std::exp(kI * (g.angle / 2.0));
      return m;
    }
    case GateKind::X:
      m << 0, 1, 1, 0;
      return m;
    case GateKind::H:
      m << 1, 1, 1, -1;
      return m / std::sqrt(2.0);
    case GateKind::S:
      m << 1, 0, 0, kI;
      return m;
    case GateKind::Sdag:
      m << 1, 0, 0, -kI;
      return m;
    default:
      throw std::logic_error("single_qubit_matrix: not a one-qubit gate");
  }
}

// Bit position of qubit q in an n-qubit index (qubit 0 most significant).
inline std::uint64_t qbit(std::size_t n, std::size_t q) {
  return std::uint64_t{1} << (n - 1 - q);
}

void apply_gate(Eigen::VectorXcd& amp, std::size_t n, const Gate& g) {
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (!is_two_qubit(g.kind)) {
    const Eigen::Matrix2cd m = single_qubit_matrix(g);
    const std::uint64_t bit = qbit(n, g.qubits[0]);
    for (std::uint64_t i = 0; i < dim; ++i) {
      if (i & bit) continue;
      const std::uint64_t j = i | bit;
      const std::complex<double> a0 = amp[i], a1 = amp[j];
      amp[i] = m(0, 0) * a0 + m(0, 1) * a1;
      amp[j] = m(1, 0) * a0 + m(1, 1) * a1;
    }
    return;
  }
  const std::uint64_t b0 = qbit(n, g.qubits[0]);
  const std::uint64_t b1 = qbit(n, g.qubits[1]);
  switch (g.kind) {
    case GateKind::CNOT:
      for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & b0) && !(i & b1)) std::swap(amp[i], amp[i | b1]);
      break;
    case GateKind::CZ:
      for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & b0) && (i & b1)) amp[i] = -amp[i];
      break;
    case GateKind::SWAP:
      for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & b0) && !(i & b1)) std::swap(amp[i], amp[(i & ~b0) | b1]);
      break;
    default:
      throw std::logic_error("apply_gate: unreachable");
  }
}

void apply_gate_rho(Eigen::MatrixXcd& rho, std::size_t n, const Gate& g) {
  // U rho U^dagger via column then row action.
  for (Eigen::Index c = 0; c < rho.cols(); ++c) {
    Eigen::VectorXcd col = rho.col(c);
    apply_gate(col, n, g);
    rho.col(c) = col;
  }
  for (Eigen::Index r = 0; r < rho.rows(); ++r) {
    Eigen::VectorXcd row = rho.row(r).conjugate().transpose();
    apply_gate(row, n, g);
    rho.row(r) = row.conjugate().transpose();
  }
}

// rho -> (1 - p) rho + p (I/4 (x) Tr_pair[rho]) on the two given qubits.
void depolarize_pair(Eigen::MatrixXcd& rho, std::size_t n, std::size_t qa,
                     std::size_t qb, double p) {
  if (p == 0.0) return;
  const std::uint64_t dim = std::uint64_t{1} << n;
  const std::uint64_t ba = qbit(n, qa), bb = qbit(n, qb);
  Eigen::MatrixXcd mixed = Eigen::MatrixXcd::Zero(dim, dim);
  // iterate over the reduced (environment) indices
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & (ba | bb)) continue;
    for (std::uint64_t j = 0; j < dim; ++j) {
      if (j & (ba | bb)) continue;
      std::complex<double> tr = 0.0;
      for (std::uint64_t s : {std::uint64_t{0}, bb, ba, ba | bb})
        tr += rho(i | s, j | s);
      for (std::uint64_t s : {std::uint64_t{0}, bb, ba, ba | bb})
        mixed(i | s, j | s) = tr / 4.0;
    }
  }
  rho = (1.0 - p) * rho + p * mixed;
}
}  // namespace

StateVector StateVector::zero(std::size_t n) { return basis(n, 0); }

StateVector StateVector::basis(std::size_t n, std::uint64_t index) {
  if (n > kDenseLimit) throw std::length_error("StateVector: too many qubits");
  StateVector s;
  s.n = n;
  s.amplitudes = Eigen::VectorXcd::Zero(std::int64_t{1} << n);
  s.amplitudes[index] = 1.0;
  return s;
}

DensityMatrix DensityMatrix::from_state(const StateVector& psi) {
  DensityMatrix d;
  d.n = psi.n;
  d.rho = psi.amplitudes * psi.amplitudes.adjoint();
  return d;
}

void DensityMatrix::validate() const {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::runtime_error("DensityMatrix: not Hermitian");
  if (std::abs(rho.trace() - std::complex<double>(1.0)) > 1e-10)
    throw std::runtime_error("DensityMatrix: trace is not 1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9)
    throw std::runtime_error("DensityMatrix: negative eigenvalue");
}

Eigen::Matrix2d ConfusionMatrix::matrix() const {
  Eigen::Matrix2d m;
  m << 1.0 - p0, p1, p0, 1.0 - p1;
  return m;
}

Eigen::Matrix2d ConfusionMatrix::inverse() const {
  validate();
  return matrix().inverse();
}

void ConfusionMatrix::validate() const {
  if (p0 < 0.0 || p1 < 0.0 || p0 + p1 >= 1.0)
    throw std::invalid_argument("ConfusionMatrix: needs p0, p1 >= 0 and p0 + p1 < 1");
}

ConfusionMatrix NoiseModel::readout_for(std::size_t q) const {
  if (readout.empty()) return ConfusionMatrix{};
  if (readout.size() == 1) return readout[0];
  if (q >= readout.size())
    throw std::out_of_range("NoiseModel: missing readout calibration for qubit");
  return readout[q];
}

void NoiseModel::validate() const {
  if (p2 < 0.0 || p2 > 1.0)
    throw std::invalid_argument("NoiseModel: p2 must lie in [0, 1]");
  if (amplification < 1 || amplification % 2 == 0)
    throw std::invalid_argument("NoiseModel: amplification must be odd and >= 1");
  for (const auto& r : readout) r.validate();
}

MeasuredDistribution MeasuredDistribution::from_counts(
    std::size_t n, std::vector<std::uint64_t> counts) {
  const std::size_t dim = std::size_t{1} << n;
  if (counts.size() != dim)
    throw std::invalid_argument("MeasuredDistribution: wrong histogram size");
  MeasuredDistribution d;
  d.n = n;
  d.counts = std::move(counts);
  d.shots = 0;
  for (auto c : d.counts) d.shots += c;
  if (d.shots == 0) throw std::invalid_argument("MeasuredDistribution: no shots");
  d.probabilities = Eigen::VectorXd(dim);
  d.sigmas = Eigen::VectorXd(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const double p = static_cast<double>(d.counts[i]) / d.shots;
    d.probabilities[i] = p;
    d.sigmas[i] = std::sqrt(std::max(p * (1.0 - p), 1.0 / d.shots) / d.shots);
  }
  return d;
}

std::string MeasuredDistribution::bitstring(std::size_t n, std::uint64_t index) {
  std::string s(n, '0');
  for (std::size_t q = 0; q < n; ++q)
    if (index & (std::uint64_t{1} << (n - 1 - q))) s[q] = '1';
  return s;
}

std::uint64_t MeasuredDistribution::index_of(const std::string& bits) {
  std::uint64_t idx = 0;
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("MeasuredDistribution: bad bitstring");
    idx = (idx << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return idx;
}

StateVector run_pure(const Circuit& circuit, const StateVector& initial) {
  if (circuit.num_qubits() != initial.n)
    throw std::invalid_argument("run_pure: qubit count mismatch");
  StateVector s = initial;
  for (const auto& g : circuit.gates()) apply_gate(s.amplitudes, s.n, g);
  if (std::abs(s.norm() - 1.0) > 1e-10)
    throw std::runtime_error("run_pure: norm drifted beyond tolerance");
  return s;
}

StateVector run_pure(const Circuit& circuit) {
  return run_pure(circuit, StateVector::zero(circuit.num_qubits()));
}

Eigen::MatrixXcd circuit_unitary(const Circuit& circuit) {
  const std::size_t n = circuit.num_qubits();
  if (n > kDenseLimit) throw std::length_error("circuit_unitary: too many qubits");
  const std::uint64_t dim = std::uint64_t{1} << n;
  Eigen::MatrixXcd u(dim, dim);
  for (std::uint64_t col = 0; col < dim; ++col) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    v[col] = 1.0;
    for (const auto& g : circuit.gates()) apply_gate(v, n, g);
    u.col(col) = v;
  }
  return u;
}

DensityMatrix run_noisy(const Circuit& circuit, const NoiseModel& noise,
                        const StateVector& initial) {
  noise.validate();
  if (circuit.num_qubits() != initial.n)
    throw std::invalid_argument("run_noisy: qubit count mismatch");
  if (initial.n > 8)
    throw std::length_error("run_noisy: density-matrix path limited to 8 qubits");
  DensityMatrix d = DensityMatrix::from_state(initial);
  const int copies = 2 * noise.amplification - 1;
  for (const auto& g : circuit.gates()) {
    if (is_two_qubit(g.kind)) {
      for (int c = 0; c < copies; ++c) {
        apply_gate_rho(d.rho, d.n, g);
        depolarize_pair(d.rho, d.n, g.qubits[0], g.qubits[1], noise.p2);
      }
    } else {
      apply_gate_rho(d.rho, d.n, g);
    }
  }
  return d;
}

DensityMatrix run_noisy(const Circuit& circuit, const NoiseModel& noise) {
  return run_noisy(circuit, noise, StateVector::zero(circuit.num_qubits()));
}

namespace {
MeasuredDistribution sample_probs(std::size_t n, Eigen::VectorXd probs,
                                  std::uint64_t shots, std::mt19937_64& rng,
                                  const std::vector<ConfusionMatrix>* readout) {
  if (shots < 1) throw std::invalid_argument("sample: shots must be >= 1");
  const std::size_t dim = std::size_t{1} << n;
  if (readout != nullptr && !readout->empty()) {
    // distort with the tensor-product confusion model, one qubit at a time
    for (std::size_t q = 0; q < n; ++q) {
      const ConfusionMatrix cm =
          readout->size() == 1 ? (*readout)[0] : readout->at(q);
      cm.validate();
      const Eigen::Matrix2d m = cm.matrix();
      const std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
      for (std::uint64_t i = 0; i < dim; ++i) {
        if (i & bit) continue;
        const double a0 = probs[i], a1 = probs[i | bit];
        probs[i] = m(0, 0) * a0 + m(0, 1) * a1;
        probs[i | bit] = m(1, 0) * a0 + m(1, 1) * a1;
      }
    }
  }
  // guard tiny negative round-off and renormalize
  for (std::size_t i = 0; i < dim; ++i) probs[i] = std::max(probs[i], 0.0);
  probs /= probs.sum();

  std::vector<double> cdf(dim);
  double acc = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    acc += probs[i];
    cdf[i] = acc;
  }
  cdf[dim - 1] = 1.0;
  std::vector<std::uint64_t> counts(dim, 0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double x = u(rng);
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), x);
    counts[static_cast<std::size_t>(it - cdf.begin())]++;
  }
  return MeasuredDistribution::from_counts(n, std::move(counts));
}
}  // namespace

MeasuredDistribution sample(const StateVector& psi, std::uint64_t shots,
                            std::mt19937_64& rng,
                            const std::vector<ConfusionMatrix>* readout) {
  return sample_probs(psi.n, psi.amplitudes.cwiseAbs2(), shots, rng, readout);
}

MeasuredDistribution sample(const DensityMatrix& rho, std::uint64_t shots,
                            std::mt19937_64& rng,
                            const std::vector<ConfusionMatrix>* readout) {
  return sample_probs(rho.n, rho.rho.diagonal().real(), shots, rng, readout);
}

double expectation(const StateVector& psi, const PauliSum& observable) {
  if (observable.num_qubits() != psi.n)
    throw std::invalid_argument("expectation: dimension mismatch");
  std::complex<double> acc = 0.0;
  const std::uint64_t dim = std::uint64_t{1} << psi.n;
  for (const auto& term : observable.terms()) {
    const std::uint64_t xm = term.op.x_mask().index_mask();
    const std::uint64_t zm = term.op.z_mask().index_mask();
    const std::complex<double> front =
        term.op.phase() * i_power(term.op.x_mask().overlap(term.op.z_mask()));
    std::complex<double> val = 0.0;
    for (std::uint64_t i = 0; i < dim; ++i) {
      const double sign = (std::popcount(i & zm) % 2 == 0) ? 1.0 : -1.0;
      val += std::conj(psi.amplitudes[i ^ xm]) * front * sign * psi.amplitudes[i];
    }
    acc += term.coeff * val;
  }
  if (std::abs(acc.imag()) > 1e-9)
    throw std::runtime_error("expectation: observable is not Hermitian");
  return acc.real();
}

double expectation(const StateVector& psi, const Eigen::MatrixXcd& observable) {
  if (observable.rows() != psi.amplitudes.size())
    throw std::invalid_argument("expectation: dimension mismatch");
  const std::complex<double> v = psi.amplitudes.adjoint() * observable * psi.amplitudes;
  if (std::abs(v.imag()) > 1e-9)
    throw std::runtime_error("expectation: observable is not Hermitian");
  return v.real();
}

double expectation(const DensityMatrix& rho, const Eigen::MatrixXcd& observable) {
  if (observable.rows() != rho.rho.rows())
    throw std::invalid_argument("expectation: dimension mismatch");
  const std::complex<double> v = (rho.rho * observable).trace();
  if (std::abs(v.imag()) > 1e-9)
    throw std::runtime_error("expectation: observable is not Hermitian");
  return v.real();
}

double global_phase_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  const std::complex<double> tr = (b.adjoint() * a).trace();
  const std::complex<double> phase =
      std::abs(tr) < 1e-14 ? std::complex<double>(1.0) : tr / std::abs(tr);
  return (a - phase * b).cwiseAbs().maxCoeff();
}

}  // namespace nucresp
