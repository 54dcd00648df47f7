#include "assoclab/delta_side.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace assoclab {

namespace {

mpz_class binomial(int n, int k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

SymExpr iint_uncached(const IndexWord& ix) {
  const int r = ix.length();
  if (r == 0) return SymExpr(1L);
  const auto& l = ix.indices;
  if (std::all_of(l.begin(), l.end(), [](int v) { return v == 0; })) {
    mpz_class factorial = 1;
    for (int k = 2; k <= r; ++k) factorial *= k;
    return SymExpr::log2().pow(r) / mpq_class(factorial);
  }

  SymExpr out;
  // m[j] ranges over 0..l[j] + m[j-1] for j = 0..r-2 (m[-1] = 0).
  std::vector<int> m(r > 1 ? r - 1 : 0);
  std::function<void(int, mpz_class)> walk = [&](int j, mpz_class coeff) {
    if (j == r - 1) {
      // Delta parts run from the last subscript back to the first.
      std::vector<int> parts(r);
      for (int i = 0; i < r; ++i) {
        const int carried_in = i > 0 ? m[i - 1] : 0;
        const int carried_out = i < r - 1 ? m[i] : 0;
        parts[r - 1 - i] = l[i] + carried_in - carried_out + 1;
      }
      out.add_term(Monomial(Generator::delta(Composition(std::move(parts)))), mpq_class(coeff));
      return;
    }
    const int carried_in = j > 0 ? m[j - 1] : 0;
    for (m[j] = 0; m[j] <= l[j] + carried_in; ++m[j]) {
      walk(j + 1, coeff * binomial(l[j + 1] + m[j], l[j + 1]));
    }
  };
  walk(0, mpz_class(1));
  return out;
}

// ad_actor^{l_1}(arg) ... ad_actor^{l_r}(arg) as integer word coefficients.
std::map<Word, mpz_class> ad_product(Letter actor, const IndexWord& ix) {
  std::map<Word, mpz_class> acc{{Word(), mpz_class(1)}};
  for (int l : ix.indices) {
    const NCSeries factor = ad_power(actor, other(actor), l);
    std::map<Word, mpz_class> next;
    for (const auto& [u, a] : acc) {
      for (const auto& [v, c] : factor.terms()) {
        const auto& [mono, q] = *c.terms().begin();
        next[u.concat(v)] += a * q.get_num();
      }
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

int IndexWord::degree() const noexcept {
  return length() + std::accumulate(indices.begin(), indices.end(), 0);
}

std::string IndexWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(indices[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const IndexWord& a, const IndexWord& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  return a.indices <=> b.indices;
}

std::vector<IndexWord> enumerate_index_words(int degree) {
  if (degree < 1) throw std::invalid_argument("index word degree must be >= 1");
  std::vector<IndexWord> out;
  for (int r = 1; r <= degree; ++r) {
    std::vector<int> ix(r, 0);
    std::function<void(int, int)> walk = [&](int pos, int remaining) {
      if (pos == r - 1) {
        ix[pos] = remaining;
        out.emplace_back(ix);
        return;
      }
      for (int v = 0; v <= remaining; ++v) {
        ix[pos] = v;
        walk(pos + 1, remaining - v);
      }
    };
    walk(0, degree - r);
  }
  return out;
}

SymExpr iint_to_sym(const IndexWord& ix) {
  for (int l : ix.indices) {
    if (l < 0) throw std::invalid_argument("index word entries must be >= 0");
  }
  static std::mutex mutex;
  static std::map<IndexWord, SymExpr> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(ix); it != cache.end()) return it->second;
  }
  SymExpr value = iint_uncached(ix);
  std::lock_guard lock(mutex);
  return cache.emplace(ix, std::move(value)).first->second;
}

NCSeries xi_series(Letter actor, int n) {
  if (n < 0) throw std::invalid_argument("xi_series needs n >= 0");
  NCSeries xi = NCSeries::unit(n);
  for (int d = 1; d <= n; ++d) {
    for (const IndexWord& ix : enumerate_index_words(d)) {
      const SymExpr coeff = iint_to_sym(ix);
      for (const auto& [w, k] : ad_product(actor, ix)) {
        if (k != 0) xi.add(w, coeff * mpq_class(k));
      }
    }
  }
  return xi;
}

NCSeries phi_delta(int n) {
  if (n < 0) throw std::invalid_argument("phi_delta needs n >= 0");
  return nc_exp_letter(Letter::B, +1, n) * xi_series(Letter::B, n) *
         nc_inverse(xi_series(Letter::A, n)) * nc_exp_letter(Letter::A, -1, n);
}

}  // namespace assoclab
