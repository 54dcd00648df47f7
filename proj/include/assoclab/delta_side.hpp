#pragma once

// Associator series with delta-value coefficients:
// exp(cB) Xi_{B,A} (Xi_{A,B})^{-1} exp(-cA).

#include <compare>
#include <string>
#include <vector>

#include "assoclab/freealg.hpp"
#include "assoclab/symring.hpp"

namespace assoclab {

/// Subscript (l_1, ..., l_r), l_i >= 0, of the iterated integral
/// I_{l_1...l_r} = 1/(l_1!...l_r!) int_{tau_1 > ... > tau_r > 0}
///   prod tau_i^{l_i} dtau_i / (2 e^{tau_i} - 1).
/// It multiplies words of degree r + sum l_i.
struct IndexWord {
  std::vector<int> indices;

  IndexWord() = default;
  IndexWord(std::initializer_list<int> ix) : indices(ix) {}
  explicit IndexWord(std::vector<int> ix) : indices(std::move(ix)) {}

  int length() const noexcept { return static_cast<int>(indices.size()); }
  int degree() const noexcept;
  /// "0,1" (empty: "").
  std::string to_string() const;

  friend bool operator==(const IndexWord&, const IndexWord&) = default;
  /// Order: degree, then length, then lexicographic.
  friend std::strong_ordering operator<=>(const IndexWord& a, const IndexWord& b);
};

/// All index words of the given degree (>= 1), ordered by length then lex.
std::vector<IndexWord> enumerate_index_words(int degree);

/// I_{l_1...l_r} as a sum of delta values (all-zero subscripts give c^r/r!).
/// Results are cached; safe to call concurrently.
SymExpr iint_to_sym(const IndexWord& ix);

/// Xi_{actor, argument} = 1 + sum_{ix} I_ix ad_actor^{l_1}(arg) ... ad_actor^{l_r}(arg)
/// truncated at degree n, where argument = other(actor).
NCSeries xi_series(Letter actor, int n);

NCSeries phi_delta(int n);

}  // namespace assoclab
