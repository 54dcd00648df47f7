#pragma once

// Exact coefficient ring: polynomials over Q in the generators ln 2,
// zeta values and delta values.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace assoclab {

class NotHomogeneous : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class WeightMismatch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotAdmissible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Nonempty ordered tuple of positive integers. Weight is the sum of the
/// parts, depth the number of parts.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts);

  /// Parses "3,1,1".
  static Composition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  int depth() const noexcept { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return parts_.at(i); }
  bool admissible() const noexcept { return parts_.front() >= 2; }

  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// Declaration order is the rank used by the generator order.
enum class GeneratorKind : std::uint8_t { Zeta = 0, Log2 = 1, Delta = 2 };

/// One of c = ln 2, zeta(comp) with comp admissible, or delta(comp).
///
/// Generators are totally ordered by (weight, kind rank Zeta < Log2 < Delta,
/// depth, parts). Larger generators are eliminated first during reduction,
/// so deep delta values end up expressed through zetas and c.
class Generator {
 public:
  static Generator log2();
  static Generator zeta(Composition comp);
  static Generator delta(Composition comp);

  GeneratorKind kind() const noexcept { return kind_; }
  /// For ln 2 this is the one-part composition {1}.
  const Composition& composition() const noexcept { return comp_; }
  int weight() const noexcept { return comp_.weight(); }
  int depth() const noexcept { return comp_.depth(); }

  /// `c`, `z[2,1]`, `d[3,1,1]`
  std::string to_string() const;
  std::string to_latex() const;

  friend bool operator==(const Generator&, const Generator&) = default;
  friend std::strong_ordering operator<=>(const Generator& a, const Generator& b);

 private:
  Generator(GeneratorKind kind, Composition comp) : kind_(kind), comp_(std::move(comp)) {}

  GeneratorKind kind_;
  Composition comp_;
};

/// Product of generator powers. Factors are kept sorted ascending in the
/// generator order with no repeats; the empty product is the unit.
///
/// Monomials compare by walking both factor lists from the largest
/// generator down, so any monomial containing a larger generator is larger.
class Monomial {
 public:
  using Factor = std::pair<Generator, int>;

  Monomial() = default;
  explicit Monomial(const Generator& g, int exponent = 1);
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_unit() const noexcept { return factors_.empty(); }
  int weight() const noexcept;
  int exponent_of(const Generator& g) const;
  /// Same monomial with every power of g removed.
  Monomial without(const Generator& g) const;

  Monomial operator*(const Monomial& other) const;

  std::string to_string() const;
  std::string to_latex() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Factor> factors_;
};

/// Finite Q-linear combination of monomials, canonical: no zero coefficients.
class SymExpr {
 public:
  using Terms = std::map<Monomial, mpq_class>;

  SymExpr() = default;
  SymExpr(const mpq_class& constant);  // NOLINT(google-explicit-constructor)
  SymExpr(long constant);               // NOLINT(google-explicit-constructor)
  SymExpr(const Generator& g);          // NOLINT(google-explicit-constructor)
  SymExpr(const Monomial& m, const mpq_class& coefficient = 1);

  static SymExpr log2() { return SymExpr(Generator::log2()); }
  static SymExpr zeta(Composition comp) { return SymExpr(Generator::zeta(std::move(comp))); }
  static SymExpr delta(Composition comp) { return SymExpr(Generator::delta(std::move(comp))); }

  /// Reads the canonical text form, e.g. "d[2] - 1/2*z[2] + 1/2*c^2".
  /// Parentheses and integer powers of subexpressions are accepted too.
  static SymExpr parse(std::string_view text);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  mpq_class coefficient(const Monomial& m) const;
  /// Largest monomial and its coefficient; nullptr for zero.
  const Terms::value_type* leading() const;

  /// Common weight of all monomials; nullopt when mixed or zero.
  std::optional<int> weight() const;
  /// True if every monomial has weight w (vacuous for zero).
  bool is_homogeneous(int w) const;
  std::set<Generator> generators() const;

  SymExpr pow(int k) const;

  SymExpr& operator+=(const SymExpr& other);
  SymExpr& operator-=(const SymExpr& other);
  SymExpr& operator*=(const SymExpr& other);
  SymExpr& operator*=(const mpq_class& scale);

  /// Adds coefficient * m in place.
  void add_term(const Monomial& m, const mpq_class& coefficient);

  friend SymExpr operator+(SymExpr a, const SymExpr& b) { return a += b; }
  friend SymExpr operator-(SymExpr a, const SymExpr& b) { return a -= b; }
  friend SymExpr operator*(const SymExpr& a, const SymExpr& b);
  friend SymExpr operator*(SymExpr a, const mpq_class& s) { return a *= s; }
  friend SymExpr operator*(const mpq_class& s, SymExpr a) { return a *= s; }
  friend SymExpr operator/(SymExpr a, const mpq_class& s) { return a *= 1 / s; }
  SymExpr operator-() const;

  friend bool operator==(const SymExpr& a, const SymExpr& b);

  /// Terms sorted from the leading monomial down.
  std::string to_string() const;
  std::string to_latex() const;

 private:
  Terms terms_;
};

SymExpr sym_add(const SymExpr& a, const SymExpr& b);
SymExpr sym_mul(const SymExpr& a, const SymExpr& b);
/// Weight of a homogeneous nonzero expression; throws NotHomogeneous otherwise.
int sym_weight(const SymExpr& e);
/// Replaces every power g^k by replacement^k. The replacement must be
/// homogeneous of weight(g); throws WeightMismatch otherwise.
SymExpr sym_substitute(const SymExpr& e, const Generator& g, const SymExpr& replacement);

std::string rational_to_string(const mpq_class& q);
std::string rational_to_latex(const mpq_class& q);

}  // namespace assoclab
