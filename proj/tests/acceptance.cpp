// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exits nonzero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "nucresp/entanglement.hpp"
#include "nucresp/gates.hpp"
#include "nucresp/mitigation.hpp"
#include "nucresp/qubitization.hpp"
#include "nucresp/triton.hpp"
#include "nucresp/trotter.hpp"
#include "test_util.hpp"

using namespace nucresp;

namespace {
int g_failures = 0;

void report(int id, bool pass, const std::string& what) {
  std::printf("[%s] criterion %2d: %s\n", pass ? "PASS" : "FAIL", id,
              what.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

LatticeSpec argon() {
  LatticeSpec s;
  s.D = 3;
  s.N_L = 10;
  s.N_f = 4;
  s.A = 40;
  s.b_max = 16.0;
  return s;
}

Eigen::MatrixXcd triton_hop(const TritonParams& p) {
  Eigen::MatrixXcd hop = Eigen::MatrixXcd::Zero(16, 16);
  for (std::size_t q = 0; q < 4; ++q) {
    std::string s("IIII");
    s[q] = 'X';
    hop += -2.0 * p.t * oracle::dense_pauli(s);
  }
  return hop;
}
}  // namespace

// 1. dense ground state of the reduced Hamiltonian: -4.843 +/- 0.002, < 1 s
static void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto [e0, psi] = exact_ground_state(TritonParams{});
  const double elapsed = seconds_since(t0);
  const bool pass = std::abs(e0 - (-4.843)) <= 0.002 && elapsed < 1.0;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "triton exact ground state E0 = %.4f (target -4.843 +/- 0.002, "
                "%.2fs)",
                e0, elapsed);
  report(1, pass, buf);
}

// 2. plain trial state optimum: -4.415 +/- 0.010, < 30 s
static void criterion_2() {
  const auto t0 = std::chrono::steady_clock::now();
  const TrialOptimum opt = optimize_trial(TritonParams{}, TrialVariant::plain);
  const double elapsed = seconds_since(t0);
  const bool pass = std::abs(opt.energy - (-4.415)) <= 0.010 && elapsed < 30.0;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "variational trial energy = %.4f (target -4.415 +/- 0.010, "
                "%.2fs)",
                opt.energy, elapsed);
  report(2, pass, buf);
}

// 3. Ar-40 qubit budget: 4000 + W in [4008, 4016]
static void criterion_3() {
  const LatticeSpec s = argon();
  const TrotterPlan beta =
      qpe_schedule(s, SplitKind::beta_kv, 2, BoundKind::commutator, 10.0);
  const TrotterPlan alpha =
      qpe_schedule(s, SplitKind::alpha, 2, BoundKind::commutator, 10.0);
  const std::int64_t qubits_beta = s.modes() + beta.W;
  const std::int64_t qubits_alpha = s.modes() + alpha.W;
  const bool pass = qubits_beta >= 4008 && qubits_beta <= 4016 &&
                    qubits_alpha >= 4008 && qubits_alpha <= 4016;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "Ar-40 qubit budget: beta %lld, alpha %lld (window [4008, 4016])",
                static_cast<long long>(qubits_beta),
                static_cast<long long>(qubits_alpha));
  report(3, pass, buf);
}

// 4. Ar-40 gate budget, beta split order 2
static void criterion_4() {
  const LatticeSpec s = argon();
  const TrotterPlan hi =
      qpe_schedule(s, SplitKind::beta_kv, 2, BoundKind::commutator, 10.0);
  const GateCost total_hi = total_cost(hi, s.sites());
  const double cnot_hi = static_cast<double>(total_hi.cnot_total_parallel());
  const double rot_hi = total_hi.rotation_units_parallel();
  const TrotterPlan lo =
      qpe_schedule(s, SplitKind::beta_kv, 2, BoundKind::commutator, 100.0);
  const GateCost total_lo = total_cost(lo, s.sites());
  const double cnot_lo = static_cast<double>(total_lo.cnot_total_parallel());
  const bool pass = cnot_hi >= 3e9 && cnot_hi <= 3e10 && rot_hi >= 3e8 &&
                    rot_hi <= 3e9 && cnot_lo >= 1.5e8 && cnot_lo <= 1.5e9;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "Ar-40 gates: %.2e CNOT, %.2e rotations at 10 MeV; %.2e CNOT "
                "at 100 MeV",
                cnot_hi, rot_hi, cnot_lo);
  report(4, pass, buf);
}

// 5. qubitization ratios: alpha exactly 8 over [4, 100]; beta in [64, 256]
static void criterion_5() {
  bool alpha_ok = true;
  for (int A = 4; A <= 100; ++A) {
    LatticeSpec s = argon();
    s.A = A;
    const double r = speedup_ratio(s, 10.0, SplitKind::alpha);
    if (std::abs(r - 8.0) > 8.0 * 1e-3) alpha_ok = false;
  }
  const double beta = speedup_ratio(argon(), 10.0, SplitKind::beta_kv);
  const bool pass = alpha_ok && beta >= 64.0 && beta <= 256.0;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "walk/evolution ratios: alpha %s 8, beta %.1f (window [64, 256])",
                alpha_ok ? "=" : "!=", beta);
  report(5, pass, buf);
}

// 6. order-4 overtakes order-2 first at A = 24 +/- 2, sweep < 10 s
static void criterion_6() {
  const auto t0 = std::chrono::steady_clock::now();
  int first = -1;
  for (int A = 4; A <= 100; ++A) {
    LatticeSpec s = argon();
    s.A = A;
    const double tau = 2.0 * std::numbers::pi / qpe_energy_span(s, SplitKind::beta_kv);
    const double eps = 5.0;
    const double lambda = lambda_of(s, SplitKind::beta_kv);
    if (r_higher_analytic(tau, lambda, eps, 2) <
        r_higher_analytic(tau, lambda, eps, 1)) {
      first = A;
      break;
    }
  }
  const double elapsed = seconds_since(t0);
  const bool pass = first >= 22 && first <= 26 && elapsed < 10.0;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "order-4 crossover at A = %d (target 24 +/- 2, %.2fs)", first,
                elapsed);
  report(6, pass, buf);
}

// 7. every emitted circuit matches its dense target to 1e-10 over >= 20 points
static void criterion_7() {
  double worst = 0.0;
  int grids = 0;
  // z-product gadgets on 1-3 qubits
  for (int g = 0; g < 3; ++g) {
    for (int k = 0; k < 20; ++k) {
      const double angle = -2.0 + 0.21 * k;
      const std::vector<std::size_t> qubits[] = {{1}, {0, 2}, {0, 1, 2}};
      const std::string labels[] = {"IZI", "ZIZ", "ZZZ"};
      const Circuit c = z_product_gadget(3, qubits[g], angle);
      worst = std::max(worst,
                       oracle::phase_dist(circuit_unitary(c),
                                          oracle::expm_i(oracle::dense_pauli(
                                                             labels[g]),
                                                         angle)));
    }
    ++grids;
  }
  // controlled rotation
  for (int k = 0; k < 21; ++k) {
    const double angle = -3.1 + 0.31 * k;
    const std::complex<double> i{0.0, 1.0};
    Eigen::Matrix4cd target = Eigen::Matrix4cd::Identity();
    target(2, 2) = std::exp(-i * angle / 2.0);
    target(3, 3) = std::exp(i * angle / 2.0);
    worst = std::max(worst, oracle::phase_dist(
                                circuit_unitary(controlled_rz(2, 0, 1, angle)),
                                target));
  }
  ++grids;
  // hopping string gadget across distances
  for (std::size_t q = 1; q <= 4; ++q)
    for (int k = 0; k < 20; ++k) {
      const double angle = -1.5 + 0.16 * k;
      std::string xs(q + 1, 'Z'), ys(q + 1, 'Z');
      xs.front() = xs.back() = 'X';
      ys.front() = ys.back() = 'Y';
      const Eigen::MatrixXcd h =
          (oracle::dense_pauli(xs) + oracle::dense_pauli(ys)) / 2.0;
      worst = std::max(
          worst, oracle::phase_dist(
                     circuit_unitary(xxyy_string_gadget(q + 1, 0, q, angle)),
                     oracle::expm_i(h, angle)));
    }
  ++grids;
  // U1 cell over coupling scales
  for (int k = 1; k <= 20; ++k) {
    const double delta = 0.002 * k;
    const double C0 = -98.2265511, D0 = 127.839693;
    const double beta = -0.75 * (C0 + D0) * delta;
    const double gamma = 0.25 * (C0 + 2.0 * D0) * delta;
    const double eta = -0.25 * D0 * delta;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(16, 16);
    for (std::size_t f = 0; f < 4; ++f)
      for (std::size_t g = f; g < 4; ++g)
        for (std::size_t m = g; m < 4; ++m) {
          if (f == g && g == m) {
            std::string s("IIII");
            s[f] = 'Z';
            h += beta * oracle::dense_pauli(s);
          } else if (f < g && g < m) {
            std::string s("IIII");
            s[f] = s[g] = s[m] = 'Z';
            h += eta * oracle::dense_pauli(s);
          } else if (f < g && g == m) {
            std::string s("IIII");
            s[f] = s[g] = 'Z';
            h += gamma * oracle::dense_pauli(s);
          }
        }
    worst = std::max(worst,
                     oracle::phase_dist(circuit_unitary(u1_cell_circuit(
                                            beta, gamma, eta)),
                                        oracle::expm_i(h, 1.0)));
  }
  ++grids;
  // triton trial circuit against its dense gate product
  for (int k = 0; k < 20; ++k) {
    const double th = 0.3 * k, ph = 0.17 * k + 0.1;
    const Circuit c = trial_circuit(th, ph, TrialVariant::plain);
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(16, 16);
    for (const auto& g : c.gates()) {
      Circuit single(4);
      single.append(g);
      u = circuit_unitary(single) * u;
    }
    worst = std::max(worst, oracle::phase_dist(circuit_unitary(c), u));
  }
  ++grids;
  // triton Trotter step against the exact split product
  const TritonParams p{};
  const Eigen::MatrixXcd hop = triton_hop(p);
  const Eigen::MatrixXcd diag =
      triton_hamiltonian(p).cast<std::complex<double>>() - hop;
  for (int k = 1; k <= 20; ++k) {
    const double tau = 0.004 * k;
    worst = std::max(
        worst,
        oracle::phase_dist(circuit_unitary(trotter_step_circuit(tau, p)),
                           oracle::expm_i(hop, tau) * oracle::expm_i(diag, tau)));
  }
  ++grids;
  const bool pass = worst < 1e-10;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "circuit-vs-matrix suite: %d grids, worst distance %.2e", grids,
                worst);
  report(7, pass, buf);
}

// 8. single-step C3 deviation reaches 0.01 inside [0.03, 0.06]; per-step
// error is second order in tau
static void criterion_8() {
  const TritonParams p{};
  const TrialOptimum opt = optimize_trial(p, TrialVariant::plain);
  const StateVector psi0 =
      run_pure(trial_circuit(opt.theta, opt.phi, TrialVariant::plain));
  double max_dev = 0.0;
  for (double t = 0.03; t <= 0.0601; t += 0.002) {
    const double dev =
        std::abs(contacts(evolve(p, psi0, t, EvolveMode::trotter(1))).C3 -
                 contacts(evolve(p, psi0, t, EvolveMode::exact())).C3);
    max_dev = std::max(max_dev, dev);
  }
  const Eigen::MatrixXcd hop = triton_hop(p);
  const Eigen::MatrixXcd full =
      triton_hamiltonian(p).cast<std::complex<double>>();
  const auto step_error = [&](double tau) {
    return oracle::spectral_norm(
        oracle::expm_i(full, tau) -
        oracle::expm_i(full - hop, tau) * oracle::expm_i(hop, tau));
  };
  const double ratio = step_error(0.02) / step_error(0.01);
  const bool pass = max_dev >= 0.01 && ratio >= 3.5;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "trotter error law: max C3 deviation %.4f in [0.03, 0.06], "
                "halving ratio %.2f",
                max_dev, ratio);
  report(8, pass, buf);
}

// 9. commutator bounds never exceed analytic ones over A in [4, 100]
static void criterion_9() {
  bool pass = true;
  for (int A = 4; A <= 100; ++A) {
    LatticeSpec s = argon();
    s.A = A;
    for (SplitKind split : {SplitKind::alpha, SplitKind::beta}) {
      const double tau =
          2.0 * std::numbers::pi / qpe_energy_span(s, split);
      const double eps = 5.0;
      const double lambda = lambda_of(s, split);
      if (r_linear_commutator(s, split, tau, eps) >
          r_linear_analytic(tau, lambda, eps))
        pass = false;
      const SplitKind second =
          split == SplitKind::alpha ? SplitKind::alpha : SplitKind::beta_kv;
      if (r_second_commutator(s, second, tau, eps) >
          r_higher_analytic(tau, lambda, eps, 1))
        pass = false;
    }
  }
  report(9, pass, "commutator bounds dominate analytic bounds on [4, 100]");
}

// 10. entanglement trajectory
static void criterion_10() {
  const TritonParams p{};
  const TrialOptimum opt = optimize_trial(p, TrialVariant::plain);
  const StateVector psi0 =
      run_pure(trial_circuit(opt.theta, opt.phi, TrialVariant::plain));
  double worst_c01 = 0.0, worst_c02 = 0.0, best_c03 = -1.0, best_t = 0.0;
  const double s03_start = entropy(partial_trace(psi0, {0, 3}));
  for (int i = 0; i <= 60; ++i) {
    const double t = 0.6 * i / 60.0;
    const StateVector psi = evolve(p, psi0, t, EvolveMode::exact());
    worst_c01 = std::max(worst_c01, concurrence(partial_trace(psi, {0, 1})));
    worst_c02 = std::max(worst_c02, concurrence(partial_trace(psi, {0, 2})));
    const double c03 = concurrence(partial_trace(psi, {0, 3}));
    if (c03 > best_c03) {
      best_c03 = c03;
      best_t = t;
    }
  }
  const bool pass = worst_c01 < 1e-9 && worst_c02 < 1e-9 && s03_start < 1e-9 &&
                    std::abs(best_t - 0.45) <= 0.05;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "entanglement: max C01 %.1e, max C02 %.1e, S03(0) %.1e, C03 "
                "peak at t = %.3f",
                worst_c01, worst_c02, s03_start, best_t);
  report(10, pass, buf);
}

// 11. mitigation efficacy on synthetic noise, seeds 1..20
static void criterion_11() {
  const TritonParams params{};
  const TrialOptimum opt = optimize_trial(params, TrialVariant::plain);
  const Circuit trial = trial_circuit(opt.theta, opt.phi, TrialVariant::plain);
  NoiseModel noise;
  noise.p2 = 0.02;
  noise.readout = {ConfusionMatrix{0.03, 0.03}};

  double mitigated = 0.0, raw = 0.0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    for (const double t : {0.05, 0.10, 0.15, 0.20}) {
      Circuit circuit(4);
      circuit.append(trial);
      circuit.append(trotter_step_circuit(t, params));
      const double truth = contacts(run_pure(circuit)).C3;
      std::vector<NoisePoint> pts;
      double bare = 0.0;
      for (int k : {1, 3, 5, 7}) {
        NoiseModel amplified = noise;
        amplified.amplification = k;
        const DensityMatrix rho = run_noisy(circuit, amplified);
        std::seed_seq seq{seed, static_cast<std::uint64_t>(k),
                          static_cast<std::uint64_t>(std::llround(t * 1000))};
        std::mt19937_64 rng(seq);
        const MeasuredDistribution dist = sample(rho, 8192, rng, &noise.readout);
        if (k == 1) bare = dist.probabilities[0];
        const auto corr = correct_readout(dist, noise.readout);
        pts.push_back({k, corr.corrected.probabilities[0],
                       corr.corrected.sigmas[0]});
      }
      const MitigationReport rep = combine(
          {richardson(pts), polynomial(pts), exponential(pts, 1.0 / 16.0)});
      mitigated += std::abs((rep.ok ? rep.value : pts[0].value) - truth);
      raw += std::abs(bare - truth);
    }
  }

  // analytic-limit readout correction: exact recovery
  Eigen::VectorXd exactp(16);
  for (int i = 0; i < 16; ++i) exactp[i] = (i + 1);
  exactp /= exactp.sum();
  const ConfusionMatrix cm{0.03, 0.03};
  Eigen::VectorXd forward = exactp;
  for (std::size_t q = 0; q < 4; ++q) {
    const Eigen::Matrix2d m = cm.matrix();
    const std::uint64_t bit = std::uint64_t{1} << (3 - q);
    for (std::uint64_t i = 0; i < 16; ++i) {
      if (i & bit) continue;
      const double a0 = forward[i], a1 = forward[i | bit];
      forward[i] = m(0, 0) * a0 + m(0, 1) * a1;
      forward[i | bit] = m(1, 0) * a0 + m(1, 1) * a1;
    }
  }
  MeasuredDistribution dist;
  dist.n = 4;
  dist.shots = 1;
  dist.probabilities = forward;
  dist.sigmas = Eigen::VectorXd::Constant(16, 1e-6);
  const auto corr = correct_readout(dist, {cm});
  const double recovery =
      (corr.corrected.probabilities - exactp).cwiseAbs().maxCoeff();

  const bool pass = mitigated * 2.0 <= raw && recovery < 1e-10;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "mitigation MAE %.4f vs raw %.4f (need <= half); readout "
                "recovery %.1e",
                mitigated / 80.0, raw / 80.0, recovery);
  report(11, pass, buf);
}

// 12. decoherence detector fixed points
static void criterion_12() {
  MeasuredDistribution uniform;
  uniform.n = 4;
  uniform.shots = 8192;
  uniform.probabilities = Eigen::VectorXd::Constant(16, 1.0 / 16.0);
  uniform.sigmas = Eigen::VectorXd::Constant(16, 1e-3);
  MeasuredDistribution basis = uniform;
  basis.probabilities = Eigen::VectorXd::Zero(16);
  basis.probabilities[0] = 1.0;

  const double ov_uniform = overlap_with_depolarized(uniform);
  const double ov_basis = overlap_with_depolarized(basis);
  const DecoherenceCheck dec =
      decoherence_check({uniform, uniform, uniform, uniform});
  const bool pass = ov_uniform == 1.0 && ov_basis == 1.0 / 16.0 && dec.decohered;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "overlap estimator: uniform %.6f (=1), basis %.6f (=1/16), "
                "depolarized flags %s",
                ov_uniform, ov_basis, dec.decohered ? "true" : "false");
  report(12, pass, buf);
}

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria failed\n", g_failures);
  return 1;
}
