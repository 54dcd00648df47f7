#pragma once

// Arbitrary-precision values of delta values, MZVs and SymExprs, and
// numeric certification of relations.

#include <boost/multiprecision/mpfr.hpp>

#include <map>
#include <mutex>
#include <string>

#include "assoclab/relations.hpp"
#include "assoclab/symring.hpp"

namespace assoclab {

using Real = boost::multiprecision::mpfr_float;

/// Requested decimal digits plus guard digits carried internally.
struct Precision {
  int digits = 40;
  int guard = 10;

  Precision() = default;
  /// Throws std::invalid_argument unless digits >= 10 and guard >= 5.
  explicit Precision(int digits, int guard = 10);

  /// digits + guard + ceil(log10(terms)): the budget for summing `terms`
  /// rounded contributions.
  int working_digits(long terms = 1) const;

  friend auto operator<=>(const Precision&, const Precision&) = default;
};

struct BigReal {
  Real value;
  int digits = 0;

  /// `digits` significant digits, e.g. "0.6931471805599453094172321214581765680755".
  std::string str() const;
  std::string str(int significant) const;
  double to_double() const { return value.convert_to<double>(); }
};

/// Truncation point of the geometric delta sums: smallest M with
/// 2^{-M} M^{depth} < 10^{-target_digits}.
int delta_cutoff(int depth, int target_digits);

/// sum_{n_1 > ... > n_k >= 1} 2^{-n_1} / prod n_i^{s_i}; parts >= 1.
BigReal eval_delta(const Composition& comp, const Precision& prec);

/// MZV by splitting its iterated-integral word at 1/2 into products of
/// delta-type values. Throws NotAdmissible.
BigReal eval_zeta(const Composition& comp, const Precision& prec);

BigReal eval_log2(const Precision& prec);

struct AltOnesValue {
  SymExpr closed_form;
  BigReal value;
};

/// Li_{1,...,1}(-1,...,-1) with n ones: closed form over {c, zeta_k} and
/// its value.
AltOnesValue eval_alt_ones(int n, const Precision& prec);

/// Generator values cached at one precision. Thread-safe.
class Evaluator {
 public:
  explicit Evaluator(Precision prec = {}) : prec_(prec) {}

  const Precision& precision() const noexcept { return prec_; }
  BigReal generator(const Generator& g);
  BigReal eval(const SymExpr& e);

 private:
  Real generator_value(const Generator& g);

  Precision prec_;
  std::mutex mutex_;
  std::map<Generator, Real> cache_;
};

/// Uses a process-wide Evaluator per precision.
BigReal eval_symexpr(const SymExpr& e, const Precision& prec);

enum class Verdict { Pass, Fail };

struct Verification {
  BigReal residual;  // |value of the expression|
  Verdict verdict;
};

/// Pass iff |value| < 10^{-(digits - 5)}.
Verification verify_expr(const SymExpr& e, const Precision& prec);
Verification verify_relation(const Relation& rel, const Precision& prec);

std::string to_string(Verdict v);

}  // namespace assoclab
