#include "nucresp/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace nucresp {

namespace {
constexpr std::complex<double> kImag{0.0, 1.0};

std::complex<double> phase_value(int exponent) {
  switch (((exponent % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}
}  // namespace

BitMask::BitMask(std::size_t nbits)
    : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

bool BitMask::test(std::size_t q) const {
  if (q >= nbits_) throw std::out_of_range("BitMask::test: bit out of range");
  return (words_[q / 64] >> (q % 64)) & 1u;
}

void BitMask::set(std::size_t q, bool value) {
  if (q >= nbits_) throw std::out_of_range("BitMask::set: bit out of range");
  const std::uint64_t bit = std::uint64_t{1} << (q % 64);
  if (value)
    words_[q / 64] |= bit;
  else
    words_[q / 64] &= ~bit;
}

bool BitMask::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

std::size_t BitMask::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

BitMask BitMask::operator^(const BitMask& other) const {
  if (nbits_ != other.nbits_) throw std::invalid_argument("BitMask size mismatch");
  BitMask out(nbits_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    out.words_[i] = words_[i] ^ other.words_[i];
  return out;
}

BitMask BitMask::operator&(const BitMask& other) const {
  if (nbits_ != other.nbits_) throw std::invalid_argument("BitMask size mismatch");
  BitMask out(nbits_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    out.words_[i] = words_[i] & other.words_[i];
  return out;
}

std::size_t BitMask::overlap(const BitMask& other) const {
  if (nbits_ != other.nbits_) throw std::invalid_argument("BitMask size mismatch");
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return c;
}

std::uint64_t BitMask::index_mask() const {
  if (nbits_ > 64) throw std::length_error("BitMask::index_mask: too wide");
  std::uint64_t out = 0;
  for (std::size_t q = 0; q < nbits_; ++q)
    if (test(q)) out |= std::uint64_t{1} << (nbits_ - 1 - q);
  return out;
}

PauliString::PauliString(std::size_t n) : n_(n), x_(n), z_(n) {}

PauliString PauliString::from_label(std::string_view label) {
  PauliString p(label.size());
  for (std::size_t q = 0; q < label.size(); ++q) p.set_letter(q, label[q]);
  return p;
}

PauliString PauliString::single(std::size_t n, std::size_t q, char letter) {
  PauliString p(n);
  p.set_letter(q, letter);
  return p;
}

std::complex<double> PauliString::phase() const { return phase_value(phase_); }

char PauliString::letter(std::size_t q) const {
  const bool x = x_.test(q), z = z_.test(q);
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

void PauliString::set_letter(std::size_t q, char letter) {
  switch (letter) {
    case 'I': x_.set(q, false); z_.set(q, false); break;
    case 'X': x_.set(q, true);  z_.set(q, false); break;
    case 'Y': x_.set(q, true);  z_.set(q, true);  break;
    case 'Z': x_.set(q, false); z_.set(q, true);  break;
    default: throw std::invalid_argument("PauliString: letter must be one of I,X,Y,Z");
  }
}

std::string PauliString::label() const {
  std::string s(n_, 'I');
  for (std::size_t q = 0; q < n_; ++q) s[q] = letter(q);
  return s;
}

bool PauliString::same_operator(const PauliString& other) const {
  return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
}

std::size_t PauliString::weight() const {
  std::size_t w = 0;
  for (std::size_t q = 0; q < n_; ++q)
    if (x_.test(q) || z_.test(q)) ++w;
  return w;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  if (a.n_ != b.n_)
    throw std::invalid_argument("multiply: qubit count mismatch");
  PauliString out(a.n_);
  out.x_ = a.x_ ^ b.x_;
  out.z_ = a.z_ ^ b.z_;
  // Writing each string as i^k * i^|x&z| X^x Z^z, the product phase picks up
  // (-1)^|a.z & b.x| from commuting Z^az past X^bx, and the Y-correction
  // exponents of the inputs minus that of the result.
  int e = a.phase_ + b.phase_;
  e += static_cast<int>(a.x_.overlap(a.z_));
  e += static_cast<int>(b.x_.overlap(b.z_));
  e -= static_cast<int>(out.x_.overlap(out.z_));
  e += 2 * static_cast<int>(a.z_.overlap(b.x_));
  out.phase_ = ((e % 4) + 4) % 4;
  return out;
}

bool commutes(const PauliString& a, const PauliString& b) {
  if (a.n_ != b.n_)
    throw std::invalid_argument("commutes: qubit count mismatch");
  const std::size_t parity = a.x_.overlap(b.z_) + a.z_.overlap(b.x_);
  return parity % 2 == 0;
}

Eigen::MatrixXcd to_matrix(const PauliString& p, std::size_t limit) {
  const std::size_t n = p.num_qubits();
  if (n > limit)
    throw std::length_error("to_matrix: qubit count exceeds dense limit");
  const std::uint64_t dim = std::uint64_t{1} << n;
  const std::uint64_t xm = p.x_mask().index_mask();
  const std::uint64_t zm = p.z_mask().index_mask();
  const std::complex<double> front =
      p.phase() * phase_value(static_cast<int>(p.x_mask().overlap(p.z_mask())));
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::uint64_t col = 0; col < dim; ++col) {
    const double sign = (std::popcount(col & zm) % 2 == 0) ? 1.0 : -1.0;
    m(col ^ xm, col) = front * sign;
  }
  return m;
}

void PauliSum::add(double coeff, const PauliString& p) {
  if (n_ == 0 && terms_.empty()) n_ = p.num_qubits();
  if (p.num_qubits() != n_)
    throw std::invalid_argument("PauliSum::add: qubit count mismatch");
  const int e = ((p.phase_exponent() % 4) + 4) % 4;
  if (e % 2 != 0)
    throw std::domain_error("PauliSum::add: imaginary phase would break Hermiticity");
  const double folded = coeff * (e == 2 ? -1.0 : 1.0);
  PauliString bare(n_);  // same masks, phase reset to +1
  for (std::size_t q = 0; q < n_; ++q) bare.set_letter(q, p.letter(q));
  terms_.push_back(Term{folded, std::move(bare)});
  dirty_ = true;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (n_ == 0 && terms_.empty()) n_ = other.n_;
  if (other.n_ != n_)
    throw std::invalid_argument("PauliSum::operator+=: qubit count mismatch");
  for (const auto& t : other.terms()) terms_.push_back(t);
  dirty_ = true;
  return *this;
}

void PauliSum::canonicalize() const {
  if (!dirty_) return;
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    if (a.op.x_mask() != b.op.x_mask()) return a.op.x_mask() < b.op.x_mask();
    return a.op.z_mask() < b.op.z_mask();
  });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().op.same_operator(t.op))
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0.0; });
  terms_ = std::move(merged);
  dirty_ = false;
}

const std::vector<PauliSum::Term>& PauliSum::terms() const {
  canonicalize();
  return terms_;
}

double PauliSum::abs_norm() const {
  double s = 0.0;
  for (const auto& t : terms()) s += std::abs(t.coeff);
  return s;
}

Eigen::MatrixXcd PauliSum::to_matrix(std::size_t limit) const {
  if (n_ > limit)
    throw std::length_error("PauliSum::to_matrix: qubit count exceeds dense limit");
  const std::uint64_t dim = std::uint64_t{1} << n_;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : terms()) m += t.coeff * nucresp::to_matrix(t.op, limit);
  return m;
}

}  // namespace nucresp
