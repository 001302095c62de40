#include "nucresp/triton.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nucresp {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};

// Diagonal energy for particle sites sa, sb in {0..3}; site 0 hosts the
// static nucleon. Base 8t + U everywhere, 2U + V extra when all three share
// site 0, and -U when the dynamical pair is split across two ordinary sites.
double diagonal_energy(const TritonParams& p, int sa, int sb) {
  double e = 8.0 * p.t + p.U;
  if (sa == 0 && sb == 0) e += 2.0 * p.U + p.V;
  if (sa != sb && sa != 0 && sb != 0) e += -p.U;
  return e;
}
}  // namespace

Eigen::MatrixXd triton_hamiltonian(const TritonParams& params) {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(16, 16);
  for (int i = 0; i < 16; ++i) {
    const int sa = i >> 2, sb = i & 3;
    h(i, i) = diagonal_energy(params, sa, sb);
    // hopping flips one qubit at a time
    for (int q = 0; q < 4; ++q) h(i ^ (8 >> q), i) += -2.0 * params.t;
  }
  return h;
}

PauliSum triton_reduced_terms(const TritonParams& params) {
  if (!params.reduced())
    throw std::invalid_argument("triton_reduced_terms: requires V = -4U");
  const double t = params.t, U = params.U;
  PauliSum sum(4);
  sum.add(8.0 * t + U / 2.0, PauliString(4));
  for (std::size_t q = 0; q < 4; ++q)
    sum.add(-2.0 * t, PauliString::single(4, q, 'X'));
  for (auto [a, b] : {std::pair<std::size_t, std::size_t>{0, 3}, {1, 2}}) {
    PauliString zz(4);
    zz.set_letter(a, 'Z');
    zz.set_letter(b, 'Z');
    sum.add(-U / 4.0, zz);
  }
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b)
      for (std::size_t c = b + 1; c < 4; ++c) {
        PauliString zzz(4);
        zzz.set_letter(a, 'Z');
        zzz.set_letter(b, 'Z');
        zzz.set_letter(c, 'Z');
        sum.add(-U / 4.0, zzz);
      }
  return sum;
}

std::pair<double, StateVector> exact_ground_state(const TritonParams& params) {
  const Eigen::MatrixXd h = triton_hamiltonian(params);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  Eigen::VectorXd v = es.eigenvectors().col(0);
  Eigen::Index imax;
  v.cwiseAbs().maxCoeff(&imax);
  if (v[imax] < 0.0) v = -v;
  StateVector psi;
  psi.n = 4;
  psi.amplitudes = v.cast<std::complex<double>>();
  return {es.eigenvalues()[0], psi};
}

Circuit trial_circuit(double theta, double phi, TrialVariant variant) {
  Circuit c(4);
  for (std::size_t q = 0; q < 4; ++q) c.append(Gate::ry(q, theta));
  c.append(Gate::cz(0, 3));
  c.append(Gate::cz(1, 2));
  if (variant == TrialVariant::plain) {
    c.append(Gate::ry(2, phi));
    c.append(Gate::ry(3, phi));
  } else {
    for (std::size_t q = 0; q < 4; ++q) c.append(Gate::ry(q, phi / 2.0));
  }
  c.append(Gate::cz(0, 3));
  c.append(Gate::cz(1, 2));
  return c;
}

namespace {
double trial_energy(const TritonParams& params, const Eigen::MatrixXd& h,
                    double theta, double phi, TrialVariant variant) {
  (void)params;
  const StateVector psi = run_pure(trial_circuit(theta, phi, variant));
  return (psi.amplitudes.adjoint() * h * psi.amplitudes)(0).real();
}
}  // namespace

TrialOptimum optimize_trial(const TritonParams& params, TrialVariant variant) {
  const Eigen::MatrixXd h = triton_hamiltonian(params);
  const auto energy = [&](double th, double ph) {
    return trial_energy(params, h, th, ph, variant);
  };
  constexpr int kGrid = 64;
  const double step = 2.0 * std::numbers::pi / kGrid;
  double best_th = 0.0, best_ph = 0.0, best_e = energy(0.0, 0.0);
  for (int i = 0; i < kGrid; ++i)
    for (int j = 0; j < kGrid; ++j) {
      const double e = energy(i * step, j * step);
      if (e < best_e) {
        best_e = e;
        best_th = i * step;
        best_ph = j * step;
      }
    }
  // Newton refinement with finite differences; the landscape is smooth and
  // the grid already sits in the right basin.
  double th = best_th, ph = best_ph;
  const double hfd = 1e-5;
  for (int iter = 0; iter < 200; ++iter) {
    const double e0 = energy(th, ph);
    const double gx = (energy(th + hfd, ph) - energy(th - hfd, ph)) / (2 * hfd);
    const double gy = (energy(th, ph + hfd) - energy(th, ph - hfd)) / (2 * hfd);
    if (std::hypot(gx, gy) < 1e-8) break;
    const double hxx =
        (energy(th + hfd, ph) - 2 * e0 + energy(th - hfd, ph)) / (hfd * hfd);
    const double hyy =
        (energy(th, ph + hfd) - 2 * e0 + energy(th, ph - hfd)) / (hfd * hfd);
    const double hxy = (energy(th + hfd, ph + hfd) - energy(th + hfd, ph - hfd) -
                        energy(th - hfd, ph + hfd) + energy(th - hfd, ph - hfd)) /
                       (4 * hfd * hfd);
    const double det = hxx * hyy - hxy * hxy;
    double dx, dy;
    if (det > 1e-12 && hxx > 0.0) {
      dx = (hyy * gx - hxy * gy) / det;
      dy = (hxx * gy - hxy * gx) / det;
    } else {
      const double g = std::hypot(gx, gy);
      dx = 0.1 * gx / g;
      dy = 0.1 * gy / g;
    }
    // backtracking keeps the step a descent step
    double scale = 1.0;
    while (scale > 1e-6 && energy(th - scale * dx, ph - scale * dy) > e0)
      scale /= 2.0;
    th -= scale * dx;
    ph -= scale * dy;
  }
  return {th, ph, energy(th, ph)};
}

namespace {
// Walsh coefficients of a 16-entry diagonal: d(x) = sum_S theta_S prod_{q in S} z_q.
std::array<double, 16> walsh_coefficients(const std::array<double, 16>& diag) {
  std::array<double, 16> theta{};
  for (int s = 0; s < 16; ++s) {
    double acc = 0.0;
    for (int x = 0; x < 16; ++x)
      acc += diag[x] * ((std::popcount(static_cast<unsigned>(x & s)) % 2) ? -1.0 : 1.0);
    theta[s] = acc / 16.0;
  }
  return theta;
}

// Subset mask with qubit 0 as the most significant of 4 bits.
int subset_bit(std::size_t q) { return 8 >> q; }

// Staircase for exp(-i sum_S theta_S Z_S): a gray-code walk per qubit level
// visits every subset once with 2^n - 2 CNOTs and 2^n - 1 rotations.
void append_diagonal_staircase(Circuit& c, const std::array<double, 16>& theta) {
  c.append(Gate::rz(0, 2.0 * theta[subset_bit(0)]));
  for (std::size_t k = 1; k < 4; ++k) {
    c.append(Gate::rz(k, 2.0 * theta[subset_bit(k)]));
    unsigned gray_prev = 0;
    for (unsigned j = 1; j < (1u << k); ++j) {
      const unsigned gray = j ^ (j >> 1);
      const unsigned flipped = gray ^ gray_prev;  // single bit, index below k
      const std::size_t b = static_cast<std::size_t>(std::countr_zero(flipped));
      c.append(Gate::cnot(b, k));
      int mask = subset_bit(k);
      for (std::size_t q = 0; q < k; ++q)
        if (gray & (1u << q)) mask |= subset_bit(q);
      c.append(Gate::rz(k, 2.0 * theta[mask]));
      gray_prev = gray;
    }
    c.append(Gate::cnot(k - 1, k));  // the final gray code is the single bit k-1
  }
}
}  // namespace

Circuit trotter_step_circuit(double tau, const TritonParams& params) {
  Circuit c(4);
  // Diagonal factor first, then the hopping layer: the closing Rx layer is
  // local, so the entanglement produced by one step is carried entirely by
  // the phase network.
  if (params.reduced()) {
    // Parity network touching every pair but (0,1): each rotation applies
    // one of the six -U/4 diagonal strings of the reduced form.
    const double theta2 = -params.U * tau / 2.0;
    c.append(Gate::cnot(0, 2));
    c.append(Gate::cnot(0, 3));
    c.append(Gate::cnot(1, 2));
    c.append(Gate::rz(2, theta2));  // parity {0,1,2}
    c.append(Gate::rz(3, theta2));  // parity {0,3}
    c.append(Gate::cnot(0, 2));
    c.append(Gate::cnot(1, 3));
    c.append(Gate::rz(2, theta2));  // parity {1,2}
    c.append(Gate::rz(3, theta2));  // parity {0,1,3}
    c.append(Gate::cnot(2, 3));
    c.append(Gate::rz(3, theta2));  // parity {0,2,3}
    c.append(Gate::cnot(0, 3));
    c.append(Gate::cnot(1, 3));
    c.append(Gate::rz(3, theta2));  // parity {1,2,3}
    c.append(Gate::cnot(2, 3));
    c.append(Gate::cnot(1, 2));
  } else {
    std::array<double, 16> diag{};
    for (int i = 0; i < 16; ++i)
      diag[static_cast<std::size_t>(i)] =
          tau * diagonal_energy(params, i >> 2, i & 3);
    auto theta = walsh_coefficients(diag);
    theta[0] = 0.0;  // constant: global phase only
    append_diagonal_staircase(c, theta);
  }
  // hopping factor: exp(-i tau (-2t) X) per qubit
  const double theta1 = -4.0 * params.t * tau;
  for (std::size_t q = 0; q < 4; ++q) c.append(Gate::rx(q, theta1));
  return c;
}

StateVector evolve(const TritonParams& params, const StateVector& state,
                   double time, const EvolveMode& mode) {
  if (time < 0.0) throw std::invalid_argument("evolve: time must be >= 0");
  if (state.n != 4) throw std::invalid_argument("evolve: needs a 4-qubit state");
  if (mode.kind == EvolveMode::Kind::exact) {
    const Eigen::MatrixXd h = triton_hamiltonian(params);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    const Eigen::VectorXcd phases =
        (-kI * time * es.eigenvalues().cast<std::complex<double>>().array())
            .exp()
            .matrix();
    StateVector out = state;
    const Eigen::MatrixXcd v = es.eigenvectors().cast<std::complex<double>>();
    out.amplitudes = v * phases.asDiagonal() * v.adjoint() * state.amplitudes;
    return out;
  }
  if (mode.steps < 1)
    throw std::invalid_argument("evolve: trotter mode needs steps >= 1");
  if (time == 0.0) return state;
  const Circuit step = trotter_step_circuit(time / mode.steps, params);
  StateVector out = state;
  for (int s = 0; s < mode.steps; ++s) out = run_pure(step, out);
  return out;
}

TritonObservables contacts(const StateVector& state) {
  if (state.n != 4) throw std::invalid_argument("contacts: needs a 4-qubit state");
  const auto p = [&](int i) { return std::norm(state.amplitudes[i]); };
  TritonObservables o{};
  o.C3 = p(0);
  o.C2_dyn = p(5) + p(10) + p(15);
  o.C2_sA = p(1) + p(2) + p(3);
  o.energy = 0.0;
  return o;
}

TritonObservables contacts(const StateVector& state, const TritonParams& params) {
  TritonObservables o = contacts(state);
  o.energy = triton_energy(params, state);
  return o;
}

double triton_energy(const TritonParams& params, const StateVector& state) {
  const Eigen::MatrixXd h = triton_hamiltonian(params);
  return (state.amplitudes.adjoint() * h.cast<std::complex<double>>() *
          state.amplitudes)(0)
      .real();
}

}  // namespace nucresp
