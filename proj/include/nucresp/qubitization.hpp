#pragma once

#include <cstdint>

#include "nucresp/gates.hpp"
#include "nucresp/lattice.hpp"
#include "nucresp/trotter.hpp"

namespace nucresp {

/// Cost model of phase estimation driven by the controlled quantum-walk
/// operator instead of Trotterized time evolution. Only the prepare,
/// reflection and select-control subcircuits are costed, so the totals are
/// lower bounds on the real walk cost.
struct QubitizationPlan {
  std::int64_t Gamma_K;  // hopping strings selected by the walk (24 M in 3D)
  std::int64_t Gamma_V;  // diagonal strings (14 M for four species)
  std::int64_t Gamma;    // total selected terms
  int N_A;               // ancilla register size, ceil(log2 Gamma)
  int ancillas;          // work ancillas per controlled walk, 2 N_A - 1
  double lambda;         // coefficient 1-norm rescaling [MeV]
  int W_q;               // phase-estimation ancilla count
  GateCost per_iterate;  // one controlled walk application
  GateCost total;        // per_iterate * (2^W_q - 1)
};

/// Subcircuit counts for one controlled walk application on N_A ancillas.
GateCost qubiterate_prepare_cost(int N_A);
GateCost qubiterate_reflection_cost(int N_A);
GateCost qubiterate_select_control_cost(int N_A);

/// Assemble the plan for a spec at frequency resolution delta_omega.
/// `two_prepares` charges both prepare applications per step instead of the
/// single-prepare accounting used by default.
QubitizationPlan qubitization_plan(const LatticeSpec& spec, double delta_omega,
                                   bool two_prepares = false);

/// Ratio of walk applications (2^W_q - 1) to base-time evolution
/// applications (2^W - 1) for the given split's phase-estimation ladder.
double speedup_ratio(const LatticeSpec& spec, double delta_omega,
                     SplitKind split);

}  // namespace nucresp
