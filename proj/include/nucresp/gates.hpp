#pragma once

#include <cstdint>

#include "nucresp/lattice.hpp"
#include "nucresp/trotter.hpp"

namespace nucresp {

/// Gate counts in the CNOT + Rz basis. `cnot`, `rz`, `c_rz` and friends are
/// serial counts; the *_depth fields are the matching parallel-layer counts
/// and default to the serial value when a construction offers no
/// parallelism. One-qubit Cliffords (H, S, X) are tracked in `clifford1`
/// and stay out of the headline totals.
struct GateCost {
  std::int64_t cnot = 0;
  std::int64_t rz = 0;
  std::int64_t c_rz = 0;
  std::int64_t t_gate = 0;
  std::int64_t clifford1 = 0;
  std::int64_t cnot_depth = 0;
  std::int64_t rz_depth = 0;
  std::int64_t c_rz_depth = 0;

  GateCost& operator+=(const GateCost& o);
  friend GateCost operator+(GateCost a, const GateCost& b) { return a += b; }
  GateCost scaled(std::int64_t factor) const;

  /// Expand every controlled rotation into 2 CNOT + 2 Rz.
  GateCost controlled_decomposed() const;

  std::int64_t cnot_total() const;        // CNOT after c-Rz decomposition
  std::int64_t rz_total() const;          // Rz after c-Rz decomposition
  std::int64_t cnot_total_parallel() const;
  std::int64_t rz_total_parallel() const;

  /// Rotations in controlled-rotation units: an uncontrolled Rz costs half
  /// a controlled one (it decomposes into 2 Rz + 2 CNOT).
  double rotation_units() const;
  double rotation_units_parallel() const;

  std::int64_t depth_serial() const;    // cnot + rz + c_rz + t_gate
  std::int64_t depth_parallel() const;  // sum of the per-kind layer counts
};

enum class U1Variant { naive, serial_opt, parallel_opt };
enum class U3Variant { naive, fswap };

/// Diagonal propagator over M four-qubit cells (Z, ZZ, ZZZ rotation layers).
GateCost u1_cost(std::int64_t M, U1Variant variant);

/// Whole-hopping propagator via a Givens-rotation network over 4M modes;
/// the controlled form needs ancilla control on only the middle rotation
/// layer.
GateCost u2_cost(std::int64_t M, bool controlled);

/// Per-term hopping propagator: naive string gadgets (upper bounds; see
/// count_naive_u3 for exact enumeration) or a fermionic-swap network.
GateCost u3_cost(std::int64_t M, U3Variant variant);

/// Exact gate count of the naive per-term hopping propagator: each string
/// pair costs 2 rotations, 4(q - p) CNOT, 8 Hadamard and 4 S-type gates.
GateCost count_naive_u3(const LatticeSpec& spec);

/// One merged Trotter step of the given split and order, with every rotation
/// accounted for in its ancilla-controlled form. Interior half-step merging
/// across repetitions is assumed, so order-2 steps cost one U1 plus one
/// hopping propagator.
GateCost step_cost(SplitKind split, int order, std::int64_t M);

/// Full phase-estimation kernel: step_cost times the adaptive total step
/// count of the plan.
GateCost total_cost(const TrotterPlan& plan, std::int64_t M);

}  // namespace nucresp
