#include "assoclab/numeric.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "assoclab/alt_ones.hpp"

namespace assoclab {

namespace {

// Boost's variable-precision default is process-global; every computation
// holds this lock while it runs at its own working precision.
std::recursive_mutex& precision_mutex() {
  static std::recursive_mutex m;
  return m;
}

class WorkingPrecision {
 public:
  explicit WorkingPrecision(int digits10) : lock_(precision_mutex()), saved_(Real::default_precision()) {
    Real::default_precision(static_cast<unsigned>(digits10));
  }
  ~WorkingPrecision() { Real::default_precision(saved_); }
  WorkingPrecision(const WorkingPrecision&) = delete;
  WorkingPrecision& operator=(const WorkingPrecision&) = delete;

 private:
  std::lock_guard<std::recursive_mutex> lock_;
  unsigned saved_;
};

Real rational_value(const mpq_class& q) {
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

// Caller holds a WorkingPrecision.
Real delta_sum(const std::vector<int>& s, int target_digits) {
  if (s.empty()) return Real(1);
  const int depth = static_cast<int>(s.size());
  const int cutoff = delta_cutoff(depth, target_digits);

  // prefix[n] = sum_{m <= n} T_{j+1}(m), where T_j(n) is the level-j summand.
  std::vector<Real> prefix(cutoff + 1, Real(1));
  for (int j = depth - 1; j >= 1; --j) {
    std::vector<Real> next(cutoff + 1, Real(0));
    for (int n = 1; n <= cutoff; ++n) {
      const Real term = prefix[n - 1] / pow(Real(n), s[j]);
      next[n] = next[n - 1] + term;
    }
    prefix.swap(next);
    prefix[0] = 0;
  }
  Real total = 0;
  Real half_power = 1;
  for (int n = 1; n <= cutoff; ++n) {
    half_power /= 2;
    total += half_power * prefix[n - 1] / pow(Real(n), s[0]);
  }
  return total;
}

Real log2_value() {
  Real x;
  mpfr_const_log2(x.backend().data(), MPFR_RNDN);
  return x;
}

// Letters of the iterated-integral word of an MZV: false = dt/t, true = dt/(1-t).
std::vector<bool> zeta_word(const Composition& comp) {
  std::vector<bool> w;
  for (int part : comp.parts()) {
    for (int i = 1; i < part; ++i) w.push_back(false);
    w.push_back(true);
  }
  return w;
}

// K0^{a-1} K1 -> a. The word must be empty or end in K1.
std::vector<int> blocks(const std::vector<bool>& w) {
  std::vector<int> parts;
  int run = 1;
  for (bool letter : w) {
    if (letter) {
      parts.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  if (run != 1) throw std::logic_error("integration word does not end in K1");
  return parts;
}

// Caller holds a WorkingPrecision.
Real zeta_sum(const Composition& comp, int target_digits) {
  if (!comp.admissible()) throw NotAdmissible("zeta(" + comp.to_string() + ") diverges");
  const std::vector<bool> w = zeta_word(comp);
  std::map<std::vector<int>, Real> memo;
  auto delta_of = [&](const std::vector<int>& parts) -> const Real& {
    auto it = memo.find(parts);
    if (it == memo.end()) it = memo.emplace(parts, delta_sum(parts, target_digits)).first;
    return it->second;
  };
  Real total = 0;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    // The prefix runs from 1/2 up to 1; substituting t -> 1 - t reverses it
    // and swaps the two kernels.
    std::vector<bool> head(w.rend() - static_cast<std::ptrdiff_t>(i), w.rend());
    for (std::size_t k = 0; k < head.size(); ++k) head[k] = !head[k];
    std::vector<bool> tail(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
    total += delta_of(blocks(head)) * delta_of(blocks(tail));
  }
  return total;
}

}  // namespace

// ------------------------------------------------------------------ Precision

Precision::Precision(int d, int g) : digits(d), guard(g) {
  if (d < 10) throw std::invalid_argument("precision needs at least 10 digits");
  if (g < 5) throw std::invalid_argument("precision needs at least 5 guard digits");
}

int Precision::working_digits(long terms) const {
  const int extra = terms > 1 ? static_cast<int>(std::ceil(std::log10(static_cast<double>(terms)))) : 0;
  return digits + guard + extra;
}

std::string BigReal::str() const { return str(digits); }

std::string BigReal::str(int significant) const {
  if (value == 0) return "0";
  return value.str(significant, std::ios_base::fmtflags(0));
}

int delta_cutoff(int depth, int target_digits) {
  const double target = target_digits * std::log(10.0);
  for (int m = 1;; ++m) {
    if (m * std::log(2.0) - depth * std::log(static_cast<double>(m)) > target) return m;
  }
}

// ----------------------------------------------------------------- evaluators

BigReal eval_delta(const Composition& comp, const Precision& prec) {
  const int wd = prec.working_digits();
  WorkingPrecision scope(wd);
  return {delta_sum(comp.parts(), prec.digits + prec.guard), prec.digits};
}

BigReal eval_zeta(const Composition& comp, const Precision& prec) {
  const int wd = prec.working_digits(comp.weight() + 1);
  WorkingPrecision scope(wd);
  return {zeta_sum(comp, wd), prec.digits};
}

BigReal eval_log2(const Precision& prec) {
  WorkingPrecision scope(prec.working_digits());
  return {log2_value(), prec.digits};
}

AltOnesValue eval_alt_ones(int n, const Precision& prec) {
  SymExpr form = alt_ones_closed_form(n);
  BigReal value = eval_symexpr(form, prec);
  return {std::move(form), std::move(value)};
}

Real Evaluator::generator_value(const Generator& g) {
  std::lock_guard lock(mutex_);
  auto it = cache_.find(g);
  if (it != cache_.end()) return it->second;
  const int wd = prec_.working_digits(g.weight() + 1);
  WorkingPrecision scope(wd);
  Real v;
  switch (g.kind()) {
    case GeneratorKind::Log2:
      v = log2_value();
      break;
    case GeneratorKind::Zeta:
      v = zeta_sum(g.composition(), wd);
      break;
    case GeneratorKind::Delta:
      v = delta_sum(g.composition().parts(), wd);
      break;
  }
  return cache_.emplace(g, v).first->second;
}

BigReal Evaluator::generator(const Generator& g) { return {generator_value(g), prec_.digits}; }

BigReal Evaluator::eval(const SymExpr& e) {
  std::map<Generator, Real> values;
  for (const Generator& g : e.generators()) values.emplace(g, generator_value(g));
  WorkingPrecision scope(prec_.working_digits(static_cast<long>(e.size())));
  Real total = 0;
  for (const auto& [m, q] : e.terms()) {
    Real term = rational_value(q);
    for (const auto& [g, k] : m.factors()) term *= pow(values.at(g), k);
    total += term;
  }
  return {total, prec_.digits};
}

BigReal eval_symexpr(const SymExpr& e, const Precision& prec) {
  static std::mutex registry_mutex;
  static std::map<Precision, std::unique_ptr<Evaluator>> registry;
  Evaluator* ev = nullptr;
  {
    std::lock_guard lock(registry_mutex);
    auto& slot = registry[prec];
    if (!slot) slot = std::make_unique<Evaluator>(prec);
    ev = slot.get();
  }
  return ev->eval(e);
}

// --------------------------------------------------------------- verification

Verification verify_expr(const SymExpr& e, const Precision& prec) {
  BigReal v = eval_symexpr(e, prec);
  WorkingPrecision scope(prec.working_digits());
  v.value = abs(v.value);
  const Real bound = pow(Real(10), -(prec.digits - 5));
  const Verdict verdict = v.value < bound ? Verdict::Pass : Verdict::Fail;
  return {std::move(v), verdict};
}

Verification verify_relation(const Relation& rel, const Precision& prec) { return verify_expr(rel.expr(), prec); }

std::string to_string(Verdict v) { return v == Verdict::Pass ? "PASS" : "FAIL"; }

}  // namespace assoclab
