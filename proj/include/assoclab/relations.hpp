#pragma once

// Relation sets (series comparison, iterated-integral shuffles, MZV duality,
// tabulated closed forms) and their exact reduction over Q.

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "assoclab/delta_side.hpp"
#include "assoclab/freealg.hpp"
#include "assoclab/symring.hpp"

namespace assoclab {

namespace provenance {

/// Coefficient of `word` differs between the two series at this order.
struct Comparison {
  int order;
  Word word;
  friend bool operator==(const Comparison&, const Comparison&) = default;
};

/// I_u I_v = sum over shuffles.
struct Shuffle {
  IndexWord u;
  IndexWord v;
  friend bool operator==(const Shuffle&, const Shuffle&) = default;
};

struct Duality {
  Composition comp;
  Composition dual;
  friend bool operator==(const Duality&, const Duality&) = default;
};

struct KnownValue {
  std::string name;
  friend bool operator==(const KnownValue&, const KnownValue&) = default;
};

}  // namespace provenance

using Provenance =
    std::variant<provenance::Comparison, provenance::Shuffle, provenance::Duality, provenance::KnownValue>;

/// Short human-readable tag, e.g. "comparison(order=2, word=AB)".
std::string describe(const Provenance& p);
/// "comparison", "shuffle", "duality" or "known".
std::string provenance_kind(const Provenance& p);

/// Rescales so that the leading monomial has coefficient 1.
SymExpr normalized(const SymExpr& e);

/// A nonzero weight-homogeneous expression asserted to vanish, stored
/// normalised (leading coefficient 1).
class Relation {
 public:
  /// Throws std::invalid_argument for zero and NotHomogeneous for mixed weights.
  Relation(const SymExpr& expr, Provenance provenance);
  /// nullopt when expr is identically zero.
  static std::optional<Relation> nonzero(const SymExpr& expr, Provenance provenance);

  const SymExpr& expr() const noexcept { return expr_; }
  int weight() const noexcept { return weight_; }
  const Provenance& provenance() const noexcept { return provenance_; }

  std::string to_string() const { return expr_.to_string() + " = 0"; }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  SymExpr expr_;
  int weight_;
  Provenance provenance_;
};

/// Every order-preserving interleaving of u and v with its multiplicity.
std::map<IndexWord, int> shuffle(const IndexWord& u, const IndexWord& v);

/// I_u I_v - sum_{shuffles} I_sigma, lifted to delta values, for unordered
/// pairs of nonempty index words with degree(u) + degree(v) <= max_weight.
/// Identically vanishing instances are dropped.
std::vector<Relation> shuffle_relations(int max_weight);

/// zeta(p_1 + 1, {1}^{q_1 - 1}, ...) = zeta(q_g + 1, {1}^{p_g - 1}, ...) for
/// weights 3..max_weight, one relation per non-self-dual pair.
std::vector<Relation> duality_relations(int max_weight);

/// Tabulated closed forms: Euler's dilogarithm and Landen's trilogarithm
/// formulas, low-depth delta values, the alternating-ones values of
/// delta_{2,2} and delta_{1,2,2}, and the weight-4/5 zeta reductions
/// (self-dual evaluation, zeta_{4,1}, zeta_{3,2}, one stuffle and two
/// zeta shuffle instances).
std::vector<Relation> known_values();

/// Normalised, deduplicated nonzero differences coeff(s1, w) - coeff(s2, w)
/// over words of degree 2..order. The witness word of a duplicate is the
/// first one in (degree, lex) order. Throws OrderMismatch.
std::vector<Relation> extract_relations(const NCSeries& s1, const NCSeries& s2);

struct AuxSelection {
  bool shuffle = true;
  bool duality = true;
  bool known = true;
};

/// Shuffle and duality relations up to max_weight plus the known values of
/// weight <= max_weight, in that order.
std::vector<Relation> aux_relations(int max_weight, AuxSelection selection = {});

/// How generating relations produce the rows of a weight class.
///  Linear: only the relations of that weight.
///  Ideal:  additionally every relation of lower weight multiplied by every
///          monomial (over the generators in play) of the missing weight.
enum class Closure { Linear, Ideal };

struct CertificateTerm {
  std::size_t input;
  Monomial multiplier;
  mpq_class coefficient;
};

/// target = sum coefficient * multiplier * inputs[input].expr()
struct Certificate {
  std::vector<CertificateTerm> terms;

  /// Distinct input indices, ascending.
  std::vector<std::size_t> inputs_used() const;
};

/// Reduced row-echelon form of the relations generated by a set of inputs,
/// built lazily per weight class. Rows are keyed by their leading monomial;
/// larger monomials are eliminated first.
class RelationSpace {
 public:
  explicit RelationSpace(Closure closure = Closure::Ideal) : closure_(closure) {}

  RelationSpace(const RelationSpace&) = delete;
  RelationSpace& operator=(const RelationSpace&) = delete;

  std::size_t add(const Relation& r);
  void add(const std::vector<Relation>& rs);

  const std::vector<Relation>& inputs() const noexcept { return inputs_; }
  Closure closure() const noexcept { return closure_; }

  /// Remainder of e after elimination; zero iff e is in the space.
  SymExpr normal_form(const SymExpr& e) const;
  bool contains(const SymExpr& e) const;
  std::optional<Certificate> certify(const SymExpr& e) const;
  /// Recomputes sum coefficient * multiplier * input from a certificate.
  SymExpr expand(const Certificate& cert) const;

  /// Reduced row-echelon basis of the weight-w class, leading monomial
  /// descending. Each row carries the provenance of the input whose
  /// insertion created its pivot.
  std::vector<Relation> basis(int weight) const;
  /// Same rows, paired with the index of the input that created the pivot.
  std::vector<std::pair<std::size_t, Relation>> basis_with_origin(int weight) const;
  std::size_t dimension(int weight) const;

 private:
  struct Key {
    std::size_t input;
    Monomial multiplier;
    friend auto operator<=>(const Key&, const Key&) = default;
    friend bool operator==(const Key&, const Key&) = default;
  };
  using Combination = std::map<Key, mpq_class>;
  struct Row {
    SymExpr expr;
    Combination combo;
    std::size_t origin;
  };
  struct Echelon {
    std::map<Monomial, Row> rows;
    std::set<Generator> alphabet;
    std::size_t input_count = 0;
  };

  const Echelon& echelon(int weight, const std::set<Generator>& extra) const;
  Echelon build(int weight, std::set<Generator> alphabet) const;
  static void insert(Echelon& e, SymExpr expr, Combination combo, std::size_t origin);
  static void eliminate(const Echelon& e, SymExpr& expr, Combination* combo);

  Closure closure_;
  std::vector<Relation> inputs_;
  mutable std::mutex mutex_;
  mutable std::map<int, Echelon> cache_;
};

struct ReduceOptions {
  Closure closure = Closure::Ideal;
  /// Report only rows whose pivot was introduced by a relation of `rels`
  /// (aux rows are inserted first and used for elimination only).
  bool primary_only = false;
};

/// Reduced row-echelon generating set of the relations spanned by
/// rels and aux, weight class by weight class (ascending).
std::vector<Relation> reduce(const std::vector<Relation>& rels, const std::vector<Relation>& aux,
                             ReduceOptions options = {});

}  // namespace assoclab
