#pragma once

// Closed-form identities used as targets by the tests and the acceptance
// runner. Each expression is asserted to vanish.

#include "assoclab/delta_side.hpp"
#include "assoclab/symring.hpp"

namespace reference {

using assoclab::SymExpr;

inline SymExpr euler_dilog() { return SymExpr::parse("z[2] - 2*d[2] - c^2"); }

// zeta(n+2) split at 1/2, n = 1, 2, 3
inline SymExpr holder_n1() { return SymExpr::parse("z[3] - (d[2,1] + 1/2*c^3 + d[2]*c + d[3])"); }
inline SymExpr holder_n2() {
  return SymExpr::parse("z[4] - (d[2,1,1] + 1/6*c^4 + 1/2*d[2]*c^2 + d[3]*c + d[4])");
}
inline SymExpr holder_n3() {
  return SymExpr::parse("z[5] - (d[2,1,1,1] + 1/24*c^5 + 1/6*d[2]*c^3 + 1/2*d[3]*c^2 + d[4]*c + d[5])");
}

// Weight-4 relation exactly as printed: the c*d[2,1] coefficient is 1.
inline SymExpr order4_as_printed() { return SymExpr::parse("1/4*z[4] - (2*d[3,1] + d[2,1]*c + 1/4*c^4)"); }
// The same relation with coefficient 2, which is what the series comparison yields.
inline SymExpr order4_corrected() { return SymExpr::parse("1/4*z[4] - (2*d[3,1] + 2*d[2,1]*c + 1/4*c^4)"); }

inline SymExpr fifth_order_zeta41() {
  return SymExpr::parse("z[4,1] - (d[4,1] + d[3,1]*c + 1/2*d[2,1]*c^2 + d[3,1,1] + d[2,1,1]*c + 1/12*c^5)");
}
inline SymExpr fifth_order_mixed() {
  return SymExpr::parse(
      "3*z[4,1] + z[3,2] - (d[3,2] + 3*d[4,1] + (1/2*d[2]^2 + d[3,1])*c + (1/2*c^2 + z[2])*d[2,1]"
      " - 3*d[3,1,1] - 2*d[2,2,1] - d[2,1,2] + 1/4*z[2]*c^3)");
}

// Weight-5 reductions of d[4,1] and d[3,2] + 3*d[4,1] in terms of zeta values and c.
// The first one is false numerically (residual about 4.4e-3); the second holds.
inline SymExpr delta41_claimed() {
  return SymExpr::parse(
      "d[4,1] - c*d[4] - 125/64*z[5] - 47/48*c^2*z[3] + 47/48*z[2]*z[3] + 9/8*c*z[4] + 5/18*c^3*z[2] - 13/360*c^5");
}
inline SymExpr delta32_combination() {
  return SymExpr::parse(
      "d[3,2] + 3*d[4,1] - (29/64*z[5] - 1/8*c*z[2]^2 - 1/8*c*z[4] - 1/30*c^5 + 1/16*c^2*z[3] - 1/16*z[2]*z[3]"
      " + 1/12*c^3*z[2])");
}

// The three weight-5 identities read off the fifth-order series comparison,
// written with iterated integrals I_l.
inline SymExpr I(std::initializer_list<int> ix) { return assoclab::iint_to_sym(assoclab::IndexWord(ix)); }

inline std::vector<SymExpr> fifth_order_iint_relations() {
  const SymExpr c = SymExpr::log2();
  const SymExpr z2 = SymExpr::zeta({2}), z3 = SymExpr::zeta({3}), z5 = SymExpr::zeta({5});
  auto q = [](long a, long b = 1) { return SymExpr(mpq_class(a, b)); };
  return {
      I({0, 3}) + c * I({0, 2}) + q(1, 2) * c.pow(2) * I({0, 1}) + I({0, 0, 2}) + c * I({0, 0, 1}) +
          q(1, 12) * c.pow(5) - (q(2) * z5 - z3 * z2),
      I({4}) + c * I({3}) + q(1, 2) * c.pow(2) * I({2}) + q(1, 6) * c.pow(3) * I({1}) + I({0, 0, 0, 1}) +
          q(1, 24) * c.pow(5) - z5,
      I({1, 2}) + q(1, 2) * c * I({1}).pow(2) + c * I({0, 2}) + (q(1, 2) * c.pow(2) + z2) * I({0, 1}) +
          I({0, 0, 2}) - I({1, 0, 1}) - I({0, 1, 1}) + q(1, 4) * c.pow(3) * z2 - q(1, 2) * z5,
  };
}

}  // namespace reference
