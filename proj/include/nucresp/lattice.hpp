#pragma once

#include <cstdint>
#include <vector>

#include "nucresp/pauli.hpp"

namespace nucresp {

/// Physical parameters of the lattice contact-interaction model. Couplings
/// default to the a = 1.4 fm parameter set; t is user-supplied and no
/// consistency with hbar^2/(2 m a^2) is enforced.
struct LatticeSpec {
  int D = 3;          // spatial dimension
  int N_L = 10;       // sites per side
  int N_f = 4;        // fermion species per site
  double a = 1.4;     // lattice spacing [fm]
  double t = 10.5794;         // hopping energy [MeV]
  double C0 = -98.2265511;    // two-body coupling [MeV]
  double D0 = 127.839693;     // three-body coupling [MeV]
  int A = 40;         // nucleon number
  double b_max = 16.0;        // binding energy per nucleon at saturation [MeV]

  std::int64_t sites() const;           // M = N_L^D
  std::int64_t modes() const;           // N_f * M
  std::int64_t n_kinetic_terms() const; // N_K = 4 D M N_f
  std::int64_t n_potential_terms() const;  // N_V, constant excluded

  void validate() const;
};

/// Operator-norm bounds derived from a LatticeSpec, all in MeV.
struct NormBounds {
  double K_abs;     // coefficient 1-norm of the hopping expansion
  double K_phys;    // A-sector bound on the kinetic norm
  double V_abs;     // coefficient 1-norm bound of the potential
  double V2_phys;   // two-body part, A-sector
  double V3_phys;   // three-body part, A-sector
  double V_phys;    // combined potential with sign cancellation
  double deltaH;        // energy-spread bound, tight potential variant
  double deltaH_loose;  // same with V2_phys + V3_phys instead of V_phys
};

/// One unordered nearest-neighbour hop between Jordan-Wigner qubits p < q.
/// `multiplicity` is 2 on two-site periodic directions, where the two bonds
/// of a pair coincide and their coefficients fold together.
struct HoppingPair {
  std::int64_t p;
  std::int64_t q;
  int multiplicity;
};

/// All distinct nearest-neighbour bonds crossed with species, in qubit
/// coordinates (orbital (i,f) -> qubit N_f*i + f). Periodic boundaries.
std::vector<HoppingPair> hopping_pairs(const LatticeSpec& spec);

/// Hopping Hamiltonian as Pauli strings: each bond-species pair contributes
/// one X Z..Z X and one Y Z..Z Y string with coefficient multiplicity * t/2.
PauliSum build_kinetic(const LatticeSpec& spec);

/// Diagonal interaction as commuting Z-strings; the identity part is dropped
/// (it only contributes a global phase to evolution). Use
/// potential_constant() for the dropped piece.
PauliSum build_potential(const LatticeSpec& spec);

/// Identity coefficient of the potential, excluded from build_potential.
double potential_constant(const LatticeSpec& spec);

/// Closed-form norm bounds for the spec.
NormBounds norms(const LatticeSpec& spec);

}  // namespace nucresp
