#pragma once

// Truncated noncommutative power series in the letters A and B with
// SymExpr coefficients.

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "assoclab/symring.hpp"

namespace assoclab {

class OrderMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotUnital : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DegreeTooLarge : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

enum class Letter : std::uint8_t { A = 0, B = 1 };

constexpr Letter other(Letter l) noexcept { return l == Letter::A ? Letter::B : Letter::A; }
constexpr char to_char(Letter l) noexcept { return l == Letter::A ? 'A' : 'B'; }

/// Word over {A, B}. Ordered by degree first, then lexicographically with A < B.
class Word {
 public:
  static constexpr int max_degree = 30;

  Word() = default;
  explicit Word(Letter l) : length_(1), bits_(static_cast<std::uint32_t>(l)) {}

  static Word power(Letter l, int k);
  /// "ABBA"; the empty word is written "1" (or "").
  static Word parse(std::string_view text);

  int degree() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }
  Letter operator[](int i) const noexcept {
    return static_cast<Letter>((bits_ >> (length_ - 1 - i)) & 1u);
  }

  Word concat(const Word& tail) const;
  /// A <-> B.
  Word swapped() const noexcept;
  Word reversed() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  // Member order makes the defaulted comparison (degree, lexicographic).
  std::uint8_t length_ = 0;
  std::uint32_t bits_ = 0;  // first letter in the most significant used bit
};

/// Power series truncated above degree `order`. Zero coefficients and words
/// longer than the order are never stored.
class NCSeries {
 public:
  using Terms = std::map<Word, SymExpr>;

  explicit NCSeries(int order);

  static NCSeries unit(int order);
  static NCSeries letter(Letter l, int order);
  static NCSeries monomial(const Word& w, const SymExpr& coeff, int order);

  int order() const noexcept { return order_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of w; throws DegreeTooLarge beyond the order.
  const SymExpr& coeff(const Word& w) const;
  /// Adds c * w; silently drops w past the truncation order.
  void add(const Word& w, const SymExpr& c);

  /// Homogeneous component of the given degree, same order.
  NCSeries degree_part(int d) const;
  /// Copy with a new truncation order (drops terms when lowering).
  NCSeries with_order(int order) const;

  NCSeries& operator+=(const NCSeries& other);
  NCSeries& operator-=(const NCSeries& other);
  NCSeries& operator*=(const SymExpr& scale);

  friend NCSeries operator+(NCSeries a, const NCSeries& b) { return a += b; }
  friend NCSeries operator-(NCSeries a, const NCSeries& b) { return a -= b; }
  friend NCSeries operator*(const NCSeries& a, const NCSeries& b);
  friend NCSeries operator*(NCSeries a, const SymExpr& s) { return a *= s; }
  friend NCSeries operator*(const SymExpr& s, NCSeries a) { return a *= s; }
  NCSeries operator-() const;

  friend bool operator==(const NCSeries& a, const NCSeries& b);

  /// One "word: coeff" line per term in (degree, lex) order.
  std::string to_string() const;

 private:
  void require_same_order(const NCSeries& other) const;

  int order_;
  Terms terms_;
};

NCSeries nc_mul(const NCSeries& a, const NCSeries& b);
/// Inverse of a series with constant term exactly 1, via sum_k (1 - s)^k.
NCSeries nc_inverse(const NCSeries& s);
/// exp(sign * c * l) truncated at degree n.
NCSeries nc_exp_letter(Letter l, int sign, int n);
/// ad_actor^m(argument) as a homogeneous polynomial of degree m + 1; the
/// returned series has order m + 1.
NCSeries ad_power(Letter actor, Letter argument, int m);
NCSeries nc_swap(const NCSeries& s);
SymExpr nc_coeff(const NCSeries& s, const Word& w);
NCSeries commutator(const NCSeries& a, const NCSeries& b);

/// True if every stored coefficient is homogeneous of weight = word degree.
bool has_weight_grading(const NCSeries& s);

}  // namespace assoclab
