#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace nucresp {

/// Maximum qubit count for dense-matrix conversion.
inline constexpr std::size_t kDenseLimit = 12;

/// Packed bit mask over n qubits, bit q describes qubit q.
class BitMask {
 public:
  BitMask() = default;
  explicit BitMask(std::size_t nbits);

  std::size_t size() const { return nbits_; }
  bool test(std::size_t q) const;
  void set(std::size_t q, bool value = true);
  bool any() const;
  std::size_t count() const;

  BitMask operator^(const BitMask& other) const;
  BitMask operator&(const BitMask& other) const;
  bool operator==(const BitMask& other) const = default;
  auto operator<=>(const BitMask& other) const = default;

  /// Number of set bits shared with `other`.
  std::size_t overlap(const BitMask& other) const;

  /// Index mask for dense vectors where qubit 0 is the most significant bit.
  /// Only valid for size() <= 64.
  std::uint64_t index_mask() const;

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// An n-qubit Pauli string stored in symplectic form: qubit q carries X iff
/// the x bit is set, Z iff the z bit is set, Y iff both. The stored operator
/// is phase * Y^(x&z)-corrected product, with phase one of {+1, +i, -1, -i}
/// kept as the exponent of i.
class PauliString {
 public:
  /// Identity on n qubits.
  explicit PauliString(std::size_t n);

  /// Parse a label like "XZIY"; the leftmost character is qubit 0.
  static PauliString from_label(std::string_view label);

  /// Single-letter string: `letter` in {I,X,Y,Z} on qubit q of n.
  static PauliString single(std::size_t n, std::size_t q, char letter);

  std::size_t num_qubits() const { return n_; }
  const BitMask& x_mask() const { return x_; }
  const BitMask& z_mask() const { return z_; }

  /// Phase exponent k, meaning the stored prefactor is i^k.
  int phase_exponent() const { return phase_; }
  std::complex<double> phase() const;

  char letter(std::size_t q) const;
  void set_letter(std::size_t q, char letter);

  /// Label with qubit 0 leftmost; phase is not rendered.
  std::string label() const;

  /// True when both masks agree (phase ignored).
  bool same_operator(const PauliString& other) const;

  /// Number of qubits acted on non-trivially.
  std::size_t weight() const;

  friend PauliString multiply(const PauliString& a, const PauliString& b);
  friend bool commutes(const PauliString& a, const PauliString& b);

 private:
  std::size_t n_;
  BitMask x_, z_;
  int phase_ = 0;  // exponent of i, mod 4
};

/// Exact operator product a*b with full phase bookkeeping.
PauliString multiply(const PauliString& a, const PauliString& b);

/// True iff ab == ba, from the symplectic overlap parity.
bool commutes(const PauliString& a, const PauliString& b);

/// Dense 2^n x 2^n matrix of the string (qubit 0 is the leftmost tensor
/// factor / most significant index bit). Throws when n exceeds `limit`.
Eigen::MatrixXcd to_matrix(const PauliString& p, std::size_t limit = kDenseLimit);

/// A real linear combination of Pauli strings. Phases +/-1 are folded into
/// the coefficients on insertion, so stored strings always carry phase +1;
/// a term whose folded coefficient would be imaginary is rejected. Duplicate
/// operators are merged, which keeps the sum Hermitian by construction.
class PauliSum {
 public:
  struct Term {
    double coeff;
    PauliString op;
  };

  PauliSum() = default;
  explicit PauliSum(std::size_t n) : n_(n) {}

  std::size_t num_qubits() const { return n_; }

  /// Add coeff * p, folding p's phase into the coefficient.
  void add(double coeff, const PauliString& p);
  PauliSum& operator+=(const PauliSum& other);

  /// Terms in canonical (mask-sorted) order with duplicates merged and
  /// zero coefficients dropped.
  const std::vector<Term>& terms() const;
  std::size_t size() const { return terms().size(); }

  /// Sum of |coeff| over canonical terms.
  double abs_norm() const;

  Eigen::MatrixXcd to_matrix(std::size_t limit = kDenseLimit) const;

 private:
  void canonicalize() const;

  std::size_t n_ = 0;
  mutable std::vector<Term> terms_;
  mutable bool dirty_ = false;
};

}  // namespace nucresp
