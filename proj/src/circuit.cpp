#include "nucresp/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace nucresp {

bool is_two_qubit(GateKind kind) {
  return kind == GateKind::CNOT || kind == GateKind::CZ || kind == GateKind::SWAP;
}

bool is_rotation(GateKind kind) {
  return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

const char* gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::X: return "X";
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::Sdag: return "Sdag";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::SWAP: return "SWAP";
  }
  throw std::logic_error("gate_name: unreachable");
}

GateKind gate_kind_from_name(const std::string& name) {
  for (GateKind k : {GateKind::RX, GateKind::RY, GateKind::RZ, GateKind::X,
                     GateKind::H, GateKind::S, GateKind::Sdag, GateKind::CNOT,
                     GateKind::CZ, GateKind::SWAP}) {
    if (name == gate_name(k)) return k;
  }
  throw std::invalid_argument("unknown gate kind: " + name);
}

void Circuit::append(Gate g) {
  const std::size_t arity = is_two_qubit(g.kind) ? 2 : 1;
  if (g.qubits.size() != arity)
    throw std::invalid_argument("Circuit::append: wrong qubit count for gate");
  for (std::size_t q : g.qubits)
    if (q >= n_) throw std::out_of_range("Circuit::append: qubit out of range");
  if (arity == 2 && g.qubits[0] == g.qubits[1])
    throw std::invalid_argument("Circuit::append: two-qubit gate needs distinct qubits");
  gates_.push_back(std::move(g));
}

void Circuit::append(const Circuit& other) {
  if (other.n_ > n_)
    throw std::invalid_argument("Circuit::append: circuit too wide");
  for (const auto& g : other.gates_) append(g);
}

Circuit Circuit::inverse() const {
  Circuit inv(n_);
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    Gate g = *it;
    if (is_rotation(g.kind)) g.angle = -g.angle;
    if (g.kind == GateKind::S) g.kind = GateKind::Sdag;
    else if (g.kind == GateKind::Sdag) g.kind = GateKind::S;
    inv.append(std::move(g));
  }
  return inv;
}

std::size_t Circuit::count(GateKind kind) const {
  return static_cast<std::size_t>(std::count_if(
      gates_.begin(), gates_.end(), [&](const Gate& g) { return g.kind == kind; }));
}

std::size_t Circuit::rotation_count() const {
  return static_cast<std::size_t>(std::count_if(
      gates_.begin(), gates_.end(), [](const Gate& g) { return is_rotation(g.kind); }));
}

std::size_t Circuit::two_qubit_count() const {
  return static_cast<std::size_t>(std::count_if(
      gates_.begin(), gates_.end(), [](const Gate& g) { return is_two_qubit(g.kind); }));
}

Circuit z_product_gadget(std::size_t n, const std::vector<std::size_t>& qubits,
                         double angle) {
  if (qubits.empty() || qubits.size() > 3)
    throw std::invalid_argument("z_product_gadget: 1 to 3 qubits");
  for (std::size_t i = 0; i < qubits.size(); ++i)
    for (std::size_t j = i + 1; j < qubits.size(); ++j)
      if (qubits[i] == qubits[j])
        throw std::invalid_argument("z_product_gadget: duplicate qubit");
  Circuit c(n);
  for (std::size_t i = 0; i + 1 < qubits.size(); ++i)
    c.append(Gate::cnot(qubits[i], qubits[i + 1]));
  c.append(Gate::rz(qubits.back(), 2.0 * angle));
  for (std::size_t i = qubits.size() - 1; i-- > 0;)
    c.append(Gate::cnot(qubits[i], qubits[i + 1]));
  return c;
}

Circuit controlled_rz(std::size_t n, std::size_t control, std::size_t target,
                      double angle) {
  if (control == target)
    throw std::invalid_argument("controlled_rz: control equals target");
  Circuit c(n);
  c.append(Gate::rz(target, angle / 2.0));
  c.append(Gate::cnot(control, target));
  c.append(Gate::rz(target, -angle / 2.0));
  c.append(Gate::cnot(control, target));
  return c;
}

namespace {
// exp(-i angle X_p Z..Z X_q / 2) after an H basis change on the endpoints.
void append_xx_half(Circuit& c, std::size_t p, std::size_t q, double angle) {
  c.append(Gate::h(p));
  c.append(Gate::h(q));
  for (std::size_t m = p; m < q; ++m) c.append(Gate::cnot(m, m + 1));
  c.append(Gate::rz(q, angle));
  for (std::size_t m = q; m-- > p;) c.append(Gate::cnot(m, m + 1));
  c.append(Gate::h(p));
  c.append(Gate::h(q));
}
}  // namespace

Circuit xxyy_string_gadget(std::size_t n, std::size_t p, std::size_t q,
                           double angle) {
  if (p >= q) throw std::invalid_argument("xxyy_string_gadget: requires p < q");
  Circuit c(n);
  append_xx_half(c, p, q, angle);
  // Y half: conjugate the X gadget by S on both endpoints.
  c.append(Gate::sdag(p));
  c.append(Gate::sdag(q));
  append_xx_half(c, p, q, angle);
  c.append(Gate::s(p));
  c.append(Gate::s(q));
  return c;
}

Circuit u1_cell_circuit(double beta, double gamma, double eta) {
  Circuit c(4);
  for (std::size_t f = 0; f < 4; ++f)
    c.append(z_product_gadget(4, {f}, beta));
  for (std::size_t f = 0; f < 4; ++f)
    for (std::size_t g = f + 1; g < 4; ++g)
      c.append(z_product_gadget(4, {f, g}, gamma));
  for (std::size_t f = 0; f < 4; ++f)
    for (std::size_t g = f + 1; g < 4; ++g)
      for (std::size_t h = g + 1; h < 4; ++h)
        c.append(z_product_gadget(4, {f, g, h}, eta));
  return c;
}

}  // namespace nucresp
