#include "nucresp/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nucresp {

std::int64_t LatticeSpec::sites() const {
  std::int64_t m = 1;
  for (int d = 0; d < D; ++d) m *= N_L;
  return m;
}

std::int64_t LatticeSpec::modes() const { return sites() * N_f; }

std::int64_t LatticeSpec::n_kinetic_terms() const {
  return 4ll * D * sites() * N_f;
}

std::int64_t LatticeSpec::n_potential_terms() const {
  // N_f (1 + (N_f-1)/2 (1 + (N_f-2)/3)) terms per site: all Z, ZZ and ZZZ
  // layers of the on-site expansion.
  const std::int64_t nf = N_f;
  const std::int64_t singles = nf;
  const std::int64_t pairs = nf * (nf - 1) / 2;
  const std::int64_t triples = nf * (nf - 1) * (nf - 2) / 6;
  return sites() * (singles + pairs + triples);
}

void LatticeSpec::validate() const {
  if (D < 1 || D > 3)
    throw std::invalid_argument("LatticeSpec: D must be 1, 2 or 3");
  if (N_L < 1) throw std::invalid_argument("LatticeSpec: N_L must be >= 1");
  if (N_f < 1) throw std::invalid_argument("LatticeSpec: N_f must be >= 1");
  if (A < 0 || A > modes())
    throw std::invalid_argument("LatticeSpec: A must satisfy 0 <= A <= N_f*M");
}

namespace {

// Site index with coordinate x[0] fastest.
std::int64_t site_index(const LatticeSpec& spec, const std::vector<int>& x) {
  std::int64_t idx = 0;
  for (int d = spec.D - 1; d >= 0; --d) idx = idx * spec.N_L + x[d];
  return idx;
}

}  // namespace

std::vector<HoppingPair> hopping_pairs(const LatticeSpec& spec) {
  spec.validate();
  std::vector<HoppingPair> pairs;
  if (spec.N_L < 2) return pairs;  // a single site has no distinct neighbour
  const std::int64_t M = spec.sites();
  std::vector<int> x(spec.D, 0);
  for (std::int64_t i = 0; i < M; ++i) {
    // decode coordinates
    std::int64_t rem = i;
    for (int d = 0; d < spec.D; ++d) {
      x[d] = static_cast<int>(rem % spec.N_L);
      rem /= spec.N_L;
    }
    for (int d = 0; d < spec.D; ++d) {
      std::vector<int> y = x;
      y[d] = (x[d] + 1) % spec.N_L;
      const std::int64_t j = site_index(spec, y);
      if (j == i) continue;
      // With N_L == 2 the +1 and -1 neighbours coincide; emit the bond once
      // from the lower site with doubled weight instead of twice.
      const int mult = (spec.N_L == 2) ? 2 : 1;
      if (spec.N_L == 2 && j < i) continue;
      for (int f = 0; f < spec.N_f; ++f) {
        std::int64_t p = spec.N_f * i + f;
        std::int64_t q = spec.N_f * j + f;
        if (p > q) std::swap(p, q);
        pairs.push_back({p, q, mult});
      }
    }
  }
  return pairs;
}

PauliSum build_kinetic(const LatticeSpec& spec) {
  spec.validate();
  const std::size_t n = static_cast<std::size_t>(spec.modes());
  PauliSum sum(n);
  if (spec.t == 0.0) return sum;
  for (const auto& b : hopping_pairs(spec)) {
    const double coeff = b.multiplicity * spec.t / 2.0;
    PauliString xs(n), ys(n);
    xs.set_letter(b.p, 'X');
    xs.set_letter(b.q, 'X');
    ys.set_letter(b.p, 'Y');
    ys.set_letter(b.q, 'Y');
    for (std::int64_t m = b.p + 1; m < b.q; ++m) {
      xs.set_letter(m, 'Z');
      ys.set_letter(m, 'Z');
    }
    sum.add(coeff, xs);
    sum.add(coeff, ys);
  }
  return sum;
}

// Per-site Pauli coefficients of the contact interaction under
// n = (1 - Z)/2. Expanding C0 sum_{f<f'} n n' + D0 sum_{f<f'<f''} n n' n''
// over the Z layers gives, with binomials over the species count N:
//   identity:  C(N,2) C0 / 4 + C(N,3) D0 / 8
//   single Z: -[(N-1) C0 / 4 + C(N-1,2) D0 / 8]  per qubit
//   ZZ:        [C0 / 4 + (N-2) D0 / 8]           per pair
//   ZZZ:      -D0 / 8                            per triple
// The fixed point: a site holding k particles must cost
// C(k,2) C0 + C(k,3) D0, matching the occupation form term by term.
namespace {
double choose2(double n) { return n * (n - 1) / 2.0; }
double choose3(double n) { return n * (n - 1) * (n - 2) / 6.0; }
}  // namespace

double potential_constant(const LatticeSpec& spec) {
  const double nf = spec.N_f;
  return spec.sites() *
         (choose2(nf) * spec.C0 / 4.0 + choose3(nf) * spec.D0 / 8.0);
}

PauliSum build_potential(const LatticeSpec& spec) {
  spec.validate();
  if (spec.N_f < 2)
    throw std::invalid_argument("build_potential: needs N_f >= 2");
  const std::size_t n = static_cast<std::size_t>(spec.modes());
  PauliSum sum(n);
  if (spec.C0 == 0.0 && spec.D0 == 0.0) return sum;
  const double nf = spec.N_f;
  const double c_single =
      -((nf - 1.0) * spec.C0 / 4.0 + choose2(nf - 1.0) * spec.D0 / 8.0);
  const double c_pair = spec.C0 / 4.0 + (nf - 2.0) * spec.D0 / 8.0;
  const double c_triple = -spec.D0 / 8.0;
  const std::int64_t M = spec.sites();
  for (std::int64_t i = 0; i < M; ++i) {
    const std::int64_t base = spec.N_f * i;
    for (int f = 0; f < spec.N_f; ++f) {
      PauliString z(n);
      z.set_letter(base + f, 'Z');
      sum.add(c_single, z);
      for (int g = f + 1; g < spec.N_f; ++g) {
        PauliString zz(n);
        zz.set_letter(base + f, 'Z');
        zz.set_letter(base + g, 'Z');
        sum.add(c_pair, zz);
        for (int h = g + 1; h < spec.N_f; ++h) {
          PauliString zzz(n);
          zzz.set_letter(base + f, 'Z');
          zzz.set_letter(base + g, 'Z');
          zzz.set_letter(base + h, 'Z');
          sum.add(c_triple, zzz);
        }
      }
    }
  }
  return sum;
}

NormBounds norms(const LatticeSpec& spec) {
  spec.validate();
  if (spec.A < 1) throw std::invalid_argument("norms: needs A >= 1");
  const double M = static_cast<double>(spec.sites());
  const double absC = std::abs(spec.C0), absD = std::abs(spec.D0);
  NormBounds nb{};
  nb.K_abs = 2.0 * spec.D * M * spec.N_f * std::abs(spec.t);
  // The momentum-space bound A D t pi^2 can exceed the coefficient 1-norm
  // once A approaches the mode count; the 1-norm always dominates the
  // spectral norm, so take the smaller of the two.
  nb.K_phys = std::min(spec.A * spec.D * spec.t * std::numbers::pi * std::numbers::pi,
                       nb.K_abs);
  nb.V_abs = M * (6.0 * absC + 8.0 * absD);
  const double A2 = std::floor(spec.A / 2.0);
  const double A3 = std::floor(spec.A / 3.0);
  const double A4 = std::floor(spec.A / 4.0);
  nb.V3_phys = 4.0 * absD * A4;
  nb.V2_phys = absC * std::max({A2, 3.0 * A3, 6.0 * A4});
  const double n2 = absC * A2;
  const double n3 = std::abs(spec.D0 + 3.0 * spec.C0) * A3;
  const double n4 = std::abs(4.0 * spec.D0 + 6.0 * spec.C0) * A4;
  nb.V_phys = std::max({n2, n3, n4});
  nb.deltaH = nb.K_phys + nb.V_phys + spec.A * spec.b_max;
  nb.deltaH_loose = nb.K_phys + nb.V2_phys + nb.V3_phys + spec.A * spec.b_max;
  return nb;
}

}  // namespace nucresp
