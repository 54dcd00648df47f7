#include "assoclab/mzv_side.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace assoclab {

namespace {

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// Compositions of r into exactly `parts` positive parts, lexicographic.
void compositions(int r, int parts, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (r == 0) out.push_back(prefix);
    return;
  }
  for (int first = 1; first <= r - (parts - 1); ++first) {
    prefix.push_back(first);
    compositions(r - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

int PQComposition::degree() const noexcept {
  return std::accumulate(p.begin(), p.end(), 0) + std::accumulate(q.begin(), q.end(), 0);
}

Composition PQComposition::zeta_index() const {
  std::vector<int> parts;
  for (int i = 0; i < g(); ++i) {
    parts.push_back(p[i] + 1);
    parts.insert(parts.end(), q[i] - 1, 1);
  }
  return Composition(std::move(parts));
}

PQComposition PQComposition::dual() const {
  PQComposition d;
  for (int i = g() - 1; i >= 0; --i) {
    d.p.push_back(q[i]);
    d.q.push_back(p[i]);
  }
  return d;
}

std::vector<PQComposition> enumerate_pq(int r) {
  if (r < 2) throw std::invalid_argument("enumerate_pq needs r >= 2");
  std::vector<PQComposition> out;
  for (int g = 1; 2 * g <= r; ++g) {
    std::vector<std::vector<int>> comps;
    std::vector<int> prefix;
    compositions(r, 2 * g, prefix, comps);
    for (const auto& c : comps) {
      PQComposition pq;
      for (int i = 0; i < g; ++i) {
        pq.p.push_back(c[2 * i]);
        pq.q.push_back(c[2 * i + 1]);
      }
      out.push_back(std::move(pq));
    }
  }
  return out;
}

NCSeries phi_mzv(int n) {
  if (n < 0) throw std::invalid_argument("phi_mzv needs n >= 0");
  NCSeries phi = NCSeries::unit(n);
  for (int r = 2; r <= n; ++r) {
    for (const PQComposition& pq : enumerate_pq(r)) {
      const int g = pq.g();
      // Integer word coefficients of the binomial expansion for this (p, q).
      std::map<Word, long> words;
      std::vector<int> s(g), t(g);
      std::function<void(int, long)> walk = [&](int i, long weight) {
        if (i == g) {
          int sum_s = 0, sum_t = 0;
          Word w;
          for (int k = 0; k < g; ++k) {
            sum_s += s[k];
            sum_t += t[k];
          }
          w = Word::power(Letter::B, sum_t);
          for (int k = 0; k < g; ++k) {
            w = w.concat(Word::power(Letter::A, pq.p[k] - s[k]));
            w = w.concat(Word::power(Letter::B, pq.q[k] - t[k]));
          }
          w = w.concat(Word::power(Letter::A, sum_s));
          words[w] += weight;
          return;
        }
        for (s[i] = 0; s[i] <= pq.p[i]; ++s[i]) {
          for (t[i] = 0; t[i] <= pq.q[i]; ++t[i]) {
            long sign = (s[i] + t[i]) % 2 == 0 ? 1 : -1;
            walk(i + 1, weight * sign * binomial(pq.p[i], s[i]) * binomial(pq.q[i], t[i]));
          }
        }
      };
      walk(0, 1);

      const int sum_q = std::accumulate(pq.q.begin(), pq.q.end(), 0);
      const SymExpr zeta = SymExpr::zeta(pq.zeta_index()) * mpq_class(sum_q % 2 == 0 ? 1 : -1);
      for (const auto& [w, k] : words) {
        if (k != 0) phi.add(w, zeta * mpq_class(k));
      }
    }
  }
  return phi;
}

}  // namespace assoclab
