#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace nucresp {

enum class GateKind { RX, RY, RZ, X, H, S, Sdag, CNOT, CZ, SWAP };

bool is_two_qubit(GateKind kind);
bool is_rotation(GateKind kind);
const char* gate_name(GateKind kind);
GateKind gate_kind_from_name(const std::string& name);

/// One gate. Rotations follow R_P(theta) = exp(-i theta P / 2). Two-qubit
/// gates use qubits[0] as control (CNOT) or the first partner (CZ, SWAP).
struct Gate {
  GateKind kind;
  std::vector<std::size_t> qubits;
  double angle = 0.0;

  static Gate rx(std::size_t q, double a) { return {GateKind::RX, {q}, a}; }
  static Gate ry(std::size_t q, double a) { return {GateKind::RY, {q}, a}; }
  static Gate rz(std::size_t q, double a) { return {GateKind::RZ, {q}, a}; }
  static Gate x(std::size_t q) { return {GateKind::X, {q}, 0.0}; }
  static Gate h(std::size_t q) { return {GateKind::H, {q}, 0.0}; }
  static Gate s(std::size_t q) { return {GateKind::S, {q}, 0.0}; }
  static Gate sdag(std::size_t q) { return {GateKind::Sdag, {q}, 0.0}; }
  static Gate cnot(std::size_t c, std::size_t t) { return {GateKind::CNOT, {c, t}, 0.0}; }
  static Gate cz(std::size_t a, std::size_t b) { return {GateKind::CZ, {a, b}, 0.0}; }
  static Gate swap(std::size_t a, std::size_t b) { return {GateKind::SWAP, {a, b}, 0.0}; }
};

/// An ordered list of gates on n qubits, immutable once built apart from
/// appends during construction.
class Circuit {
 public:
  explicit Circuit(std::size_t n) : n_(n) {}

  std::size_t num_qubits() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }

  void append(Gate g);
  void append(const Circuit& other);

  /// Formal inverse: reversed order, negated angles, S <-> Sdag.
  Circuit inverse() const;

  std::size_t count(GateKind kind) const;
  std::size_t rotation_count() const;
  std::size_t two_qubit_count() const;

 private:
  std::size_t n_;
  std::vector<Gate> gates_;
};

/// CNOT-ladder conjugated rotation implementing exp(-i angle Z x ... x Z)
/// on up to three distinct qubits: a k-body factor costs 2(k-1) CNOT + 1 Rz.
Circuit z_product_gadget(std::size_t n, const std::vector<std::size_t>& qubits,
                         double angle);

/// Controlled z-rotation |0><0| (x) 1 + |1><1| (x) Rz(angle) up to a global
/// phase, as Rz(angle/2), CNOT, Rz(-angle/2), CNOT: 2 CNOT + 2 Rz.
Circuit controlled_rz(std::size_t n, std::size_t control, std::size_t target,
                      double angle);

/// Hopping-string gadget exp(-i angle (X_p Z.. X_q + Y_p Z.. Y_q) / 2) for
/// p < q: 2 rotations, 4(q-p) CNOT, 8 H and 4 S-type gates.
Circuit xxyy_string_gadget(std::size_t n, std::size_t p, std::size_t q,
                           double angle);

/// Naive diagonal propagator on one four-qubit cell:
/// exp(-i (beta sum Z + gamma sum ZZ + eta sum ZZZ)) over qubits 0..3,
/// built from z_product_gadget factors (14 rotations, 28 CNOT).
Circuit u1_cell_circuit(double beta, double gamma, double eta);

}  // namespace nucresp
