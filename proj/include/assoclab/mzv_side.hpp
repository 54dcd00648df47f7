#pragma once

// Associator series with multiple zeta value coefficients.

#include <vector>

#include "assoclab/freealg.hpp"
#include "assoclab/symring.hpp"

namespace assoclab {

/// Exponent data (p_1, q_1, ..., p_g, q_g), all >= 1, of the word
/// A^{p_1} B^{q_1} ... A^{p_g} B^{q_g}.
struct PQComposition {
  std::vector<int> p;
  std::vector<int> q;

  int g() const noexcept { return static_cast<int>(p.size()); }
  int degree() const noexcept;
  /// (p_1 + 1, {1}^{q_1 - 1}, ..., p_g + 1, {1}^{q_g - 1}); always admissible.
  Composition zeta_index() const;
  /// (q_g, p_g, ..., q_1, p_1): the data of the dual zeta value.
  PQComposition dual() const;

  friend bool operator==(const PQComposition&, const PQComposition&) = default;
};

/// All solutions of sum(p_i + q_i) = r, ordered by g, then lexicographically
/// on the interleaved tuple (p_1, q_1, p_2, ...).
std::vector<PQComposition> enumerate_pq(int r);

/// 1 + sum_{r=2..n} of the nested-binomial expansion. Coefficients are raw
/// admissible zeta generators; no duality or shuffle normalisation.
NCSeries phi_mzv(int n);

}  // namespace assoclab
