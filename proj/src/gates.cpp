#include "nucresp/gates.hpp"

#include <stdexcept>

namespace nucresp {

GateCost& GateCost::operator+=(const GateCost& o) {
  cnot += o.cnot;
  rz += o.rz;
  c_rz += o.c_rz;
  t_gate += o.t_gate;
  clifford1 += o.clifford1;
  cnot_depth += o.cnot_depth;
  rz_depth += o.rz_depth;
  c_rz_depth += o.c_rz_depth;
  return *this;
}

GateCost GateCost::scaled(std::int64_t factor) const {
  GateCost g = *this;
  g.cnot *= factor;
  g.rz *= factor;
  g.c_rz *= factor;
  g.t_gate *= factor;
  g.clifford1 *= factor;
  g.cnot_depth *= factor;
  g.rz_depth *= factor;
  g.c_rz_depth *= factor;
  return g;
}

GateCost GateCost::controlled_decomposed() const {
  GateCost g = *this;
  g.cnot += 2 * c_rz;
  g.rz += 2 * c_rz;
  g.cnot_depth += 2 * c_rz_depth;
  g.rz_depth += 2 * c_rz_depth;
  g.c_rz = 0;
  g.c_rz_depth = 0;
  return g;
}

std::int64_t GateCost::cnot_total() const { return cnot + 2 * c_rz; }
std::int64_t GateCost::rz_total() const { return rz + 2 * c_rz; }
std::int64_t GateCost::cnot_total_parallel() const {
  return cnot_depth + 2 * c_rz_depth;
}
std::int64_t GateCost::rz_total_parallel() const {
  return rz_depth + 2 * c_rz_depth;
}

double GateCost::rotation_units() const { return c_rz + rz / 2.0; }
double GateCost::rotation_units_parallel() const {
  return c_rz_depth + rz_depth / 2.0;
}

std::int64_t GateCost::depth_serial() const { return cnot + rz + c_rz + t_gate; }
std::int64_t GateCost::depth_parallel() const {
  return cnot_depth + rz_depth + c_rz_depth + t_gate;
}

GateCost u1_cost(std::int64_t M, U1Variant variant) {
  if (M < 0) throw std::invalid_argument("u1_cost: M must be >= 0");
  GateCost g;
  if (M == 0) return g;
  switch (variant) {
    case U1Variant::naive:
      g.c_rz = 14 * M;
      g.cnot = 28 * M;
      g.c_rz_depth = 14;
      g.cnot_depth = 28;
      break;
    case U1Variant::serial_opt:
      g.c_rz = 14 * M;
      g.cnot = 14 * M;
      g.c_rz_depth = 14;
      g.cnot_depth = 14;
      break;
    case U1Variant::parallel_opt:
      g.c_rz = 14 * M;
      g.cnot = 16 * M;
      g.c_rz_depth = 7;
      g.cnot_depth = 8;
      break;
  }
  return g;
}

GateCost u2_cost(std::int64_t M, bool controlled) {
  if (M < 1) throw std::invalid_argument("u2_cost: M must be >= 1");
  GateCost g;
  if (controlled) {
    g.rz = 8 * M * (4 * M - 1);
    g.c_rz = 4 * M;
    g.cnot = 4 * M * (20 * M - 3);
    g.rz_depth = 16 * M - 6;
    g.c_rz_depth = 1;
    g.cnot_depth = 80 * M - 30;
  } else {
    g.rz = 32 * M * M;
    g.cnot = 20 * M * (4 * M - 1);
    g.rz_depth = 16 * M - 4;
    g.cnot_depth = 80 * M - 28;
  }
  return g;
}

GateCost u3_cost(std::int64_t M, U3Variant variant) {
  if (M < 0) throw std::invalid_argument("u3_cost: M must be >= 0");
  GateCost g;
  if (M == 0) return g;
  switch (variant) {
    case U3Variant::naive:
      g.c_rz = 24 * M;
      g.cnot = 48 * M * M;
      g.c_rz_depth = 24 * M;
      g.cnot_depth = 48 * M * M;
      break;
    case U3Variant::fswap:
      g.c_rz = 24 * M;
      g.cnot = 6 * M * (4 * M - 1);
      g.c_rz_depth = 8 * M;
      g.cnot_depth = 12 * M;
      break;
  }
  return g;
}

GateCost count_naive_u3(const LatticeSpec& spec) {
  GateCost g;
  for (const auto& b : hopping_pairs(spec)) {
    g.rz += 2;
    g.cnot += 4 * (b.q - b.p);
    g.clifford1 += 12;  // 8 H, 2 S, 2 S-dagger per string pair
  }
  g.rz_depth = g.rz;
  g.cnot_depth = g.cnot;
  return g;
}

GateCost step_cost(SplitKind split, int order, std::int64_t M) {
  if (order < 1 || (order > 1 && order % 2 != 0))
    throw std::invalid_argument("step_cost: order must be 1 or even");
  const GateCost u1 = u1_cost(M, U1Variant::parallel_opt);
  GateCost base;
  if (is_beta(split)) {
    base = u2_cost(M, /*controlled=*/true) + u1;
  } else if (order == 1) {
    base = u3_cost(M, U3Variant::fswap) + u1;
  } else {
    // symmetric step: forward and reversed term products around one U1
    base = u3_cost(M, U3Variant::fswap).scaled(2) + u1;
  }
  if (order <= 2) return base;
  // each recursion level multiplies the step into five half-length ones
  std::int64_t reps = 1;
  for (int k = 2; k <= order / 2; ++k) reps *= 5;
  return base.scaled(reps);
}

GateCost total_cost(const TrotterPlan& plan, std::int64_t M) {
  return step_cost(plan.split, plan.order, M).scaled(plan.r_total_adaptive);
}

}  // namespace nucresp
