#include "assoclab/alt_ones.hpp"

#include <functional>
#include <stdexcept>

namespace assoclab {

SymExpr signed_polylog_at_unit(int k) {
  if (k < 1) throw std::invalid_argument("polylog order must be >= 1");
  if (k == 1) return -SymExpr::log2();
  if (k % 2 == 0) return SymExpr::zeta({k});
  mpq_class factor(mpz_class(1), mpz_class(1) << (k - 1));
  return SymExpr::zeta({k}) * mpq_class(factor - 1);
}

SymExpr alt_ones_closed_form(int n) {
  if (n < 1) throw std::invalid_argument("alt_ones_closed_form needs n >= 1");
  std::vector<SymExpr> base(n + 1);
  for (int k = 1; k <= n; ++k) base[k] = -signed_polylog_at_unit(k) / mpq_class(k);

  SymExpr total;
  // Choose multiplicities j_k for k = n, n-1, ..., 1.
  std::function<void(int, int, SymExpr)> walk = [&](int k, int remaining, SymExpr acc) {
    if (k == 0) {
      if (remaining == 0) total += acc;
      return;
    }
    mpz_class factorial = 1;
    SymExpr power(1L);
    for (int j = 0; j * k <= remaining; ++j) {
      if (j > 0) {
        factorial *= j;
        power *= base[k];
      }
      walk(k - 1, remaining - j * k, acc * power / mpq_class(factorial));
    }
  };
  walk(n, n, SymExpr(1L));
  return n % 2 == 0 ? total : -total;
}

}  // namespace assoclab
