#include "nucresp/trotter.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nucresp {

namespace {
constexpr double kE = std::numbers::e;

std::int64_t checked_ceil(double x) {
  if (!(x >= 0.0) || x > 9.0e18)
    throw std::overflow_error("step count out of range");
  const double c = std::ceil(x);
  return static_cast<std::int64_t>(c);
}

double c_commutator_bound(const LatticeSpec& spec, SplitKind split) {
  const NormBounds nb = norms(spec);
  if (is_beta(split)) return 2.0 * nb.K_phys * nb.V_phys;
  const double nk = static_cast<double>(spec.n_kinetic_terms());
  const double t = std::abs(spec.t);
  return 2.0 * nk * t * nb.V_phys + nk * (nk - 1.0) * t * t;
}

double t_commutator_bound(const LatticeSpec& spec, SplitKind variant) {
  const NormBounds nb = norms(spec);
  const double K = nb.K_phys, V = nb.V_phys;
  switch (variant) {
    case SplitKind::beta_kv:
    case SplitKind::beta:
      return 2.0 * K * V * (2.0 * V + K);
    case SplitKind::beta_vk:
      return 2.0 * K * V * (2.0 * K + V);
    case SplitKind::alpha: {
      const double nk = static_cast<double>(spec.n_kinetic_terms());
      const double t = std::abs(spec.t);
      const double t3 = t * t * t;
      return 4.0 * nk * nk * t * t * V + 4.0 * nk * t * V * V +
             2.0 * nk * (nk - 1.0) * t3 +
             (2.0 / 3.0) * nk * (2.0 * nk * nk - 3.0 * nk + 1.0) * t3;
    }
  }
  throw std::logic_error("t_commutator_bound: unreachable");
}
}  // namespace

bool is_beta(SplitKind s) { return s != SplitKind::alpha; }

double lambda_of(const LatticeSpec& spec, SplitKind split) {
  const NormBounds nb = norms(spec);
  if (is_beta(split)) return nb.K_phys + nb.V_phys;
  return std::abs(spec.t) * static_cast<double>(spec.n_kinetic_terms()) + nb.V_phys;
}

std::int64_t r_linear_analytic(double tau, double lambda, double eps) {
  if (tau <= 0.0 || lambda <= 0.0 || eps <= 0.0)
    throw std::invalid_argument("r_linear_analytic: tau, lambda, eps must be positive");
  const double r = std::max(tau * lambda, kE * tau * lambda * lambda / eps);
  return std::max<std::int64_t>(1, checked_ceil(r));
}

std::int64_t r_higher_analytic(double tau, double lambda, double eps, int k) {
  if (tau <= 0.0 || lambda <= 0.0 || eps <= 0.0)
    throw std::invalid_argument("r_higher_analytic: tau, lambda, eps must be positive");
  if (k < 1) throw std::invalid_argument("r_higher_analytic: k must be >= 1");
  const double five = std::pow(5.0, k - 1);
  const double rho = 2.0 * tau * five * lambda;
  const double branch =
      std::pow(2.0 * kE * lambda * five / (3.0 * eps), 1.0 / (2.0 * k));
  return std::max<std::int64_t>(1, checked_ceil(rho * std::max(1.0, branch)));
}

std::int64_t r_linear_commutator(const LatticeSpec& spec, SplitKind split,
                                 double tau, double eps) {
  if (tau <= 0.0 || eps <= 0.0)
    throw std::invalid_argument("r_linear_commutator: tau, eps must be positive");
  const double C = c_commutator_bound(spec, split);
  const double lambda = lambda_of(spec, split);
  const auto gamma1 = [&](double r) {
    const double s = tau / r;
    return (C / 2.0) * s +
           s * s * (lambda * lambda * lambda / 3.0) * std::exp(s * lambda);
  };
  // gamma1 is strictly decreasing in r and vanishes as r -> infinity:
  // bracket exponentially, then bisect to the smallest admissible integer.
  std::int64_t lo = 1;
  if (gamma1(1.0) <= eps) return 1;
  std::int64_t hi = 2;
  while (gamma1(static_cast<double>(hi)) > eps) {
    lo = hi;
    if (hi > (std::int64_t{1} << 62)) throw std::overflow_error("r_linear_commutator: no bracket");
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (gamma1(static_cast<double>(mid)) <= eps)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

std::int64_t r_second_commutator(const LatticeSpec& spec, SplitKind variant,
                                 double tau, double eps) {
  if (tau <= 0.0 || eps <= 0.0)
    throw std::invalid_argument("r_second_commutator: tau, eps must be positive");
  const double T = t_commutator_bound(spec, variant);
  return std::max<std::int64_t>(1, checked_ceil(tau * std::sqrt(T / (12.0 * eps))));
}

std::int64_t r_steps(const LatticeSpec& spec, SplitKind split, int order,
                     BoundKind bound, double tau, double eps) {
  if (order < 1 || (order > 1 && order % 2 != 0))
    throw std::invalid_argument("r_steps: order must be 1 or even");
  if (bound == BoundKind::commutator && order == 1)
    return r_linear_commutator(spec, split, tau, eps);
  if (bound == BoundKind::commutator && order == 2)
    return r_second_commutator(spec, split, tau, eps);
  const double lambda = lambda_of(spec, split);
  if (order == 1) return r_linear_analytic(tau, lambda, eps);
  return r_higher_analytic(tau, lambda, eps, order / 2);
}

double qpe_energy_span(const LatticeSpec& spec, SplitKind split) {
  const NormBounds nb = norms(spec);
  if (is_beta(split)) return nb.deltaH;
  return nb.K_abs + nb.V_phys + spec.A * spec.b_max;
}

TrotterPlan qpe_schedule(const LatticeSpec& spec, SplitKind split, int order,
                         BoundKind bound, double delta_omega) {
  if (delta_omega <= 0.0)
    throw std::invalid_argument("qpe_schedule: delta_omega must be positive");
  TrotterPlan plan{};
  plan.split = split;
  plan.order = order;
  plan.bound = bound;
  plan.delta_omega = delta_omega;
  plan.eps_tau = delta_omega / 2.0;
  const double span = qpe_energy_span(spec, split);
  plan.tau_base = 2.0 * std::numbers::pi / span;
  const int W = static_cast<int>(std::ceil(std::log2(span / plan.eps_tau)));
  if (W < 1)
    throw std::invalid_argument(
        "qpe_schedule: resolution is coarser than the energy spread (W < 1)");
  if (W > 62) throw std::overflow_error("qpe_schedule: ladder too deep");
  plan.W = W;
  plan.r_base = r_steps(spec, split, order, bound, plan.tau_base, plan.eps_tau);

  const std::int64_t intervals = (std::int64_t{1} << W) - 1;
  plan.r_total_same_flat = intervals * plan.r_base;
  // Same-r policy with the error budget split evenly over the ladder.
  const std::int64_t r_apportioned =
      r_steps(spec, split, order, bound, plan.tau_base,
              plan.eps_tau / static_cast<double>(intervals));
  plan.r_total_same = intervals * r_apportioned;

  std::int64_t adaptive = 0;
  for (int j = 0; j < W; ++j) {
    const double tau_j = std::ldexp(plan.tau_base, j);  // 2^j * tau_base
    adaptive += r_steps(spec, split, order, bound, tau_j, plan.eps_tau);
  }
  plan.r_total_adaptive = adaptive;
  return plan;
}

}  // namespace nucresp
