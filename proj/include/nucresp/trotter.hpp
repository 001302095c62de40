#pragma once

#include <cstdint>

#include "nucresp/lattice.hpp"

namespace nucresp {

/// Hamiltonian splittings for product formulas. `alpha` treats every hopping
/// string separately against one potential factor; the `beta` family keeps
/// whole kinetic and potential factors. At first order the K+V / V+K
/// distinction is immaterial and `beta` stands for both.
enum class SplitKind { alpha, beta, beta_kv, beta_vk };

enum class BoundKind { analytic, commutator };

bool is_beta(SplitKind s);

/// Lambda_alpha = |t| N_K + ||V||_phys, Lambda_beta = ||K||_phys + ||V||_phys:
/// upper bounds on the sum of term norms entering the analytic step bounds.
double lambda_of(const LatticeSpec& spec, SplitKind split);

/// First-order analytic step count r = ceil(max{tau L, e tau L^2 / eps}).
std::int64_t r_linear_analytic(double tau, double lambda, double eps);

/// Order-2k analytic step count from the symmetric recursion,
/// r = ceil(rho max{1, (2 e L 5^(k-1) / 3 eps)^(1/2k)}) with rho = 2 tau 5^(k-1) L.
std::int64_t r_higher_analytic(double tau, double lambda, double eps, int k);

/// First-order commutator bound: smallest r with
/// (C/2)(tau/r) + (tau/r)^2 (L^3/3) exp(tau L / r) <= eps.
std::int64_t r_linear_commutator(const LatticeSpec& spec, SplitKind split,
                                 double tau, double eps);

/// Second-order commutator bound r = ceil(tau sqrt(T / 12 eps)); the variant
/// picks the nested-commutator bound T for alpha, beta K+V or beta V+K.
std::int64_t r_second_commutator(const LatticeSpec& spec, SplitKind variant,
                                 double tau, double eps);

/// Step count for one evolution of length tau at energy error eps, for the
/// requested split/order/bound. Commutator bounds exist for orders 1 and 2
/// only; higher orders fall back to the analytic form.
std::int64_t r_steps(const LatticeSpec& spec, SplitKind split, int order,
                     BoundKind bound, double tau, double eps);

/// Energy-spread bound that sets the base time 2 pi / deltaH for the split.
/// The beta family uses the A-sector bound; alpha, whose kinetic factor is
/// handled term by term, uses the coefficient 1-norm of the hopping instead.
double qpe_energy_span(const LatticeSpec& spec, SplitKind split);

/// A resolved phase-estimation schedule: ancilla count, ladder of evolution
/// intervals 2^j * tau_base, and total step counts under the same-r and
/// adaptive policies.
struct TrotterPlan {
  SplitKind split;
  int order;
  BoundKind bound;
  double delta_omega;  // MeV
  double eps_tau;      // = delta_omega / 2
  double tau_base;     // = 2 pi / deltaH  [1/MeV]
  int W;               // ancilla count
  std::int64_t r_base;            // steps for tau_base at eps_tau
  std::int64_t r_total_same;      // (2^W - 1) * r_base with evenly split error
  std::int64_t r_total_same_flat; // (2^W - 1) * r_base without apportionment
  std::int64_t r_total_adaptive;  // sum over the ladder of per-interval optima
};

TrotterPlan qpe_schedule(const LatticeSpec& spec, SplitKind split, int order,
                         BoundKind bound, double delta_omega);

}  // namespace nucresp
