#include "assoclab/selftest.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "assoclab/delta_side.hpp"
#include "assoclab/freealg.hpp"
#include "assoclab/mzv_side.hpp"
#include "assoclab/numeric.hpp"
#include "assoclab/relations.hpp"

namespace assoclab {

namespace {

SymExpr random_expr(std::mt19937& rng) {
  static const std::vector<SymExpr> gens = {SymExpr::log2(),        SymExpr::zeta({2}),   SymExpr::zeta({3}),
                                            SymExpr::delta({2}),    SymExpr::delta({2, 1}), SymExpr::delta({1, 2}),
                                            SymExpr::zeta({2, 1})};
  std::uniform_int_distribution<int> pick(0, static_cast<int>(gens.size()) - 1);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> len(0, 3);
  SymExpr out;
  for (int t = 0; t < 3; ++t) {
    SymExpr term(mpq_class(num(rng), den(rng)));
    for (int k = len(rng); k > 0; --k) term *= gens[pick(rng)];
    out += term;
  }
  return out;
}

NCSeries random_series(std::mt19937& rng, int order, bool unital) {
  NCSeries s = unital ? NCSeries::unit(order) : NCSeries(order);
  std::uniform_int_distribution<int> coin(0, 2);
  for (int d = unital ? 1 : 0; d <= order; ++d) {
    for (std::uint32_t bits = 0; bits < (1u << d); ++bits) {
      if (coin(rng) != 0) continue;
      Word w;
      for (int i = d - 1; i >= 0; --i) w = w.concat(Word(static_cast<Letter>((bits >> i) & 1u)));
      s.add(w, random_expr(rng));
    }
  }
  return s;
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

class Suite {
 public:
  void check(const std::string& name, const std::function<std::string()>& body) {
    try {
      std::string failure = body();
      results_.push_back({name, failure.empty(), failure});
    } catch (const std::exception& e) {
      results_.push_back({name, false, std::string("exception: ") + e.what()});
    }
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

// Every coefficient of s must lie in the space; reports the first that does not.
std::string all_coefficients_in(const NCSeries& s, const RelationSpace& space) {
  for (const auto& [w, c] : s.terms()) {
    if (!space.contains(c)) return "coefficient of " + w.to_string() + " not reduced: " + c.to_string();
  }
  return {};
}

void symring_checks(Suite& suite) {
  suite.check("symring: ring axioms on random triples", [] {
    std::mt19937 rng(7);
    for (int i = 0; i < 60; ++i) {
      SymExpr a = random_expr(rng), b = random_expr(rng), c = random_expr(rng);
      if (!((a * b) * c == a * (b * c))) return std::string("associativity");
      if (!(a * b == b * a)) return std::string("commutativity");
      if (!(a * (b + c) == a * b + a * c)) return std::string("distributivity");
      if (!(SymExpr::parse(a.to_string()) == a)) return "round trip of " + a.to_string();
    }
    return std::string();
  });
  suite.check("symring: generator order is a strict total order", [] {
    std::vector<Generator> gens = {Generator::log2()};
    for (int w = 1; w <= 5; ++w) {
      std::function<void(std::vector<int>, int)> walk = [&](std::vector<int> acc, int left) {
        if (left == 0) {
          Composition comp(acc);
          gens.push_back(Generator::delta(comp));
          if (comp.admissible()) gens.push_back(Generator::zeta(comp));
          return;
        }
        for (int p = 1; p <= left; ++p) {
          acc.push_back(p);
          walk(acc, left - p);
          acc.pop_back();
        }
      };
      walk({}, w);
    }
    for (const auto& a : gens) {
      for (const auto& b : gens) {
        const bool lt = a < b, gt = b < a, eq = a == b;
        if (static_cast<int>(lt) + static_cast<int>(gt) + static_cast<int>(eq) != 1) {
          return "not total on " + a.to_string() + ", " + b.to_string();
        }
      }
    }
    std::vector<Generator> sorted = gens;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
      if (!(sorted[i] < sorted[i + 1])) return std::string("sort not strictly increasing");
    }
    return std::string();
  });
}

void freealg_checks(Suite& suite) {
  suite.check("freealg: associativity at order 4", [] {
    std::mt19937 rng(11);
    for (int i = 0; i < 4; ++i) {
      NCSeries a = random_series(rng, 4, false), b = random_series(rng, 4, false), c = random_series(rng, 4, false);
      if (!((a * b) * c == a * (b * c))) return std::string("associativity");
    }
    return std::string();
  });
  suite.check("freealg: two-sided inverse and swap automorphism", [] {
    std::mt19937 rng(13);
    for (int i = 0; i < 4; ++i) {
      NCSeries s = random_series(rng, 4, true), t = random_series(rng, 4, true);
      NCSeries inv = nc_inverse(s);
      if (!(s * inv == NCSeries::unit(4)) || !(inv * s == NCSeries::unit(4))) return std::string("inverse");
      if (!(nc_swap(s * t) == nc_swap(s) * nc_swap(t))) return std::string("swap");
    }
    return std::string();
  });
  suite.check("freealg: ad powers match the binomial expansion", [] {
    for (int m = 0; m <= 6; ++m) {
      NCSeries expected(m + 1);
      for (int s = 0; s <= m; ++s) {
        Word w = Word::power(Letter::A, m - s).concat(Word(Letter::B)).concat(Word::power(Letter::A, s));
        expected.add(w, SymExpr(mpq_class((s % 2 == 0 ? 1 : -1) * binomial(m, s))));
      }
      if (!(ad_power(Letter::A, Letter::B, m) == expected)) return "m = " + std::to_string(m);
    }
    return std::string();
  });
}

void series_checks(Suite& suite, int max_order) {
  const int n = std::min(max_order, 5);
  suite.check("mzv_side: solution counts", [] {
    for (int r = 2; r <= 9; ++r) {
      long expected = 0;
      for (int g = 1; 2 * g <= r; ++g) expected += binomial(r - 1, 2 * g - 1);
      if (static_cast<long>(enumerate_pq(r).size()) != expected) return "r = " + std::to_string(r);
    }
    return std::string();
  });
  suite.check("series: weight grading", [n] {
    if (!has_weight_grading(phi_mzv(n))) return std::string("mzv series");
    if (!has_weight_grading(phi_delta(n))) return std::string("delta series");
    return std::string();
  });
  suite.check("delta_side: I of zeros is c^r/r!", [] {
    SymExpr expected(1L);
    for (int r = 1; r <= 8; ++r) {
      expected = expected * SymExpr::log2() / mpq_class(r);
      if (!(iint_to_sym(IndexWord(std::vector<int>(r, 0))) == expected)) return "r = " + std::to_string(r);
    }
    return std::string();
  });
  suite.check("delta_side: inverse property is exact", [n] {
    const NCSeries phi = phi_delta(n);
    return phi * nc_swap(phi) == NCSeries::unit(n) ? std::string() : std::string("phi * swap(phi) != 1");
  });
  suite.check("mzv_side: inverse property modulo auxiliary relations", [n] {
    const NCSeries phi = phi_mzv(n);
    RelationSpace space;
    if (n >= 2) space.add(aux_relations(n));
    return all_coefficients_in(phi * nc_swap(phi) - NCSeries::unit(n), space);
  });
}

void relation_checks(Suite& suite, int max_order) {
  const int n = std::min(max_order, 5);
  suite.check("relations: shuffle sizes are binomial", [] {
    for (int a = 0; a <= 4; ++a) {
      for (int b = 0; a + b <= 8; ++b) {
        int total = 0;
        for (const auto& [w, k] : shuffle(IndexWord(std::vector<int>(a, 1)), IndexWord(std::vector<int>(b, 0)))) {
          total += k;
        }
        if (total != binomial(a + b, a)) return "lengths " + std::to_string(a) + ", " + std::to_string(b);
      }
    }
    return std::string();
  });
  suite.check("relations: emitted relations are normalised", [n] {
    if (n < 2) return std::string();
    auto rels = extract_relations(phi_mzv(n), phi_delta(n));
    auto aux = aux_relations(n);
    rels.insert(rels.end(), aux.begin(), aux.end());
    for (const auto& r : rels) {
      if (r.expr().leading()->second != 1) return "not normalised: " + r.to_string();
      if (!r.expr().is_homogeneous(r.weight())) return "not homogeneous: " + r.to_string();
    }
    return std::string();
  });
  suite.check("relations: reduce is idempotent", [n] {
    if (n < 2) return std::string();
    const int m = std::min(n, 4);
    auto rels = extract_relations(phi_mzv(m), phi_delta(m));
    auto aux = aux_relations(m);
    auto once = reduce(rels, aux);
    auto twice = reduce(once, aux);
    if (once.size() != twice.size()) return std::string("second reduction changed the row count");
    for (std::size_t i = 0; i < once.size(); ++i) {
      if (!(once[i].expr() == twice[i].expr())) return "row " + std::to_string(i) + " differs";
    }
    return std::string();
  });
  suite.check("relations: everything verifies at 40 digits", [n] {
    if (n < 2) return std::string();
    const Precision prec(40);
    auto rels = extract_relations(phi_mzv(n), phi_delta(n));
    auto aux = aux_relations(n);
    rels.insert(rels.end(), aux.begin(), aux.end());
    for (const auto& r : rels) {
      auto v = verify_relation(r, prec);
      if (v.verdict != Verdict::Pass) return r.to_string() + " residual " + v.residual.str(6);
    }
    if (verify_expr(SymExpr::zeta({2}) - SymExpr::delta({2}), prec).verdict != Verdict::Fail) {
      return std::string("non-relation passed");
    }
    return std::string();
  });
}

void numeric_checks(Suite& suite) {
  suite.check("numeric: duality holds numerically to weight 6", [] {
    const Precision prec(30);
    const Real tol = pow(Real(10), -28);
    for (int w = 2; w <= 6; ++w) {
      for (const auto& pq : enumerate_pq(w)) {
        BigReal a = eval_zeta(pq.zeta_index(), prec);
        BigReal b = eval_zeta(pq.dual().zeta_index(), prec);
        if (abs(a.value - b.value) > tol) return "zeta(" + pq.zeta_index().to_string() + ")";
      }
    }
    return std::string();
  });
}

// Antisymmetrisations w_i = psi^{BA}_i - psi^{AB}_i with psi^{BA} = e^{cB} Xi_{B,A}.
void antisymmetrisation_checks(Suite& suite) {
  constexpr int n = 3;
  const SymExpr c = SymExpr::log2();
  const NCSeries a = NCSeries::letter(Letter::A, n);
  const NCSeries b = NCSeries::letter(Letter::B, n);
  const NCSeries x = b * a - a * b;
  const NCSeries big_c = (a + b) * c;
  const NCSeries psi_ba = nc_exp_letter(Letter::B, 1, n) * xi_series(Letter::B, n);
  const NCSeries psi_ab = nc_exp_letter(Letter::A, 1, n) * xi_series(Letter::A, n);
  const NCSeries phi = phi_delta(n);
  auto omega = [&](int i) { return (psi_ba - psi_ab).degree_part(i); };

  suite.check("oracle: second-order psi", [&] {
    const NCSeries expected = big_c * big_c * SymExpr(mpq_class(1, 2)) + x * (c.pow(2) / 2 + SymExpr::delta({2}));
    return psi_ba.degree_part(2) == expected ? std::string() : std::string("psi^BA_2 mismatch");
  });
  suite.check("oracle: w2 = (c^2 + 2 I_1) X = Phi_2", [&] {
    const NCSeries expected = x * (c.pow(2) + SymExpr::delta({2}) * mpq_class(2));
    if (!(omega(2) == expected)) return std::string("w2 mismatch");
    if (!(phi.degree_part(2) == expected)) return std::string("Phi_2 mismatch");
    return std::string();
  });
  suite.check("oracle: Phi_3 = w3 - Phi_2 C", [&] {
    const NCSeries expected = (omega(3) - phi.degree_part(2) * big_c).degree_part(3);
    return phi.degree_part(3) == expected ? std::string() : std::string("Phi_3 mismatch");
  });
  suite.check("oracle: Phi_3 = (c I_1 + c^3/2 + I_2 + I_01)[A+B, X]", [&] {
    const SymExpr coeff =
        c * iint_to_sym({1}) + c.pow(3) / 2 + iint_to_sym({2}) + iint_to_sym({0, 1});
    const NCSeries expected = ((a + b) * x - x * (a + b)) * coeff;
    RelationSpace space;
    space.add(shuffle_relations(3));
    space.add(Relation(SymExpr::zeta({2}) - SymExpr::delta({2}) * mpq_class(2) - c.pow(2),
                       provenance::KnownValue{"euler_dilogarithm"}));
    return all_coefficients_in(phi.degree_part(3) - expected, space);
  });
}

}  // namespace

std::vector<CheckResult> run_selftest(int max_order) {
  Suite suite;
  symring_checks(suite);
  freealg_checks(suite);
  series_checks(suite, max_order);
  relation_checks(suite, max_order);
  numeric_checks(suite);
  antisymmetrisation_checks(suite);
  return suite.take();
}

}  // namespace assoclab
