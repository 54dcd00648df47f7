#include "assoclab/symring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace assoclab {

// ---------------------------------------------------------------- Composition

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) {
    throw std::invalid_argument("composition must have at least one part");
  }
  for (int p : parts_) {
    if (p < 1) {
      throw std::invalid_argument("composition parts must be >= 1");
    }
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

Composition Composition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view piece = text.substr(pos, end - pos);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) {
      piece.remove_prefix(1);
    }
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) {
      piece.remove_suffix(1);
    }
    if (piece.empty() || !std::all_of(piece.begin(), piece.end(),
                                      [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      throw ParseError("bad composition '" + std::string(text) + "'");
    }
    parts.push_back(std::stoi(std::string(piece)));
    pos = end + 1;
  }
  try {
    return Composition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string Composition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

// ------------------------------------------------------------------ Generator

Generator Generator::log2() { return Generator(GeneratorKind::Log2, Composition{1}); }

Generator Generator::zeta(Composition comp) {
  if (!comp.admissible()) {
    throw NotAdmissible("zeta(" + comp.to_string() + ") is divergent: first part must be >= 2");
  }
  return Generator(GeneratorKind::Zeta, std::move(comp));
}

Generator Generator::delta(Composition comp) { return Generator(GeneratorKind::Delta, std::move(comp)); }

std::strong_ordering operator<=>(const Generator& a, const Generator& b) {
  if (auto c = a.weight() <=> b.weight(); c != 0) return c;
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.depth() <=> b.depth(); c != 0) return c;
  return a.comp_ <=> b.comp_;
}

std::string Generator::to_string() const {
  switch (kind_) {
    case GeneratorKind::Log2:
      return "c";
    case GeneratorKind::Zeta:
      return "z[" + comp_.to_string() + "]";
    case GeneratorKind::Delta:
      return "d[" + comp_.to_string() + "]";
  }
  return {};
}

std::string Generator::to_latex() const {
  switch (kind_) {
    case GeneratorKind::Log2:
      return "\\ln 2";
    case GeneratorKind::Zeta:
      return "\\zeta_{" + comp_.to_string() + "}";
    case GeneratorKind::Delta:
      return "\\delta_{" + comp_.to_string() + "}";
  }
  return {};
}

// ------------------------------------------------------------------- Monomial

Monomial::Monomial(const Generator& g, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  if (exponent > 0) factors_.emplace_back(g, exponent);
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& x, const Factor& y) { return x.first < y.first; });
  Monomial m;
  for (auto& [g, e] : factors) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == g) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(std::move(g), e);
    }
  }
  return m;
}

int Monomial::weight() const noexcept {
  int w = 0;
  for (const auto& [g, e] : factors_) w += e * g.weight();
  return w;
}

int Monomial::exponent_of(const Generator& g) const {
  for (const auto& [h, e] : factors_) {
    if (h == g) return e;
  }
  return 0;
}

Monomial Monomial::without(const Generator& g) const {
  Monomial m;
  for (const auto& f : factors_) {
    if (f.first != g) m.factors_.push_back(f);
  }
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  m.factors_.reserve(factors_.size() + other.factors_.size());
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end() || j != other.factors_.end()) {
    if (j == other.factors_.end() || (i != factors_.end() && i->first < j->first)) {
      m.factors_.push_back(*i++);
    } else if (i == factors_.end() || j->first < i->first) {
      m.factors_.push_back(*j++);
    } else {
      m.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  auto i = a.factors_.rbegin();
  auto j = b.factors_.rbegin();
  for (; i != a.factors_.rend() && j != b.factors_.rend(); ++i, ++j) {
    if (auto c = i->first <=> j->first; c != 0) return c;
    if (auto c = i->second <=> j->second; c != 0) return c;
  }
  return a.factors_.size() <=> b.factors_.size();
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [g, e] : factors_) {
    if (!out.empty()) out += '*';
    out += g.to_string();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string Monomial::to_latex() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [g, e] : factors_) {
    if (!out.empty()) out += ' ';
    if (e == 1) {
      out += g.to_latex();
    } else if (g.kind() == GeneratorKind::Log2) {
      out += "(\\ln 2)^{" + std::to_string(e) + "}";
    } else {
      out += g.to_latex() + "^{" + std::to_string(e) + "}";
    }
  }
  return out;
}

// -------------------------------------------------------------------- SymExpr

SymExpr::SymExpr(const mpq_class& constant) { add_term(Monomial(), constant); }

SymExpr::SymExpr(long constant) : SymExpr(mpq_class(constant)) {}

SymExpr::SymExpr(const Generator& g) { terms_.emplace(Monomial(g), mpq_class(1)); }

SymExpr::SymExpr(const Monomial& m, const mpq_class& coefficient) { add_term(m, coefficient); }

mpq_class SymExpr::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

const SymExpr::Terms::value_type* SymExpr::leading() const {
  return terms_.empty() ? nullptr : &*terms_.rbegin();
}

std::optional<int> SymExpr::weight() const {
  if (terms_.empty()) return std::nullopt;
  int w = terms_.begin()->first.weight();
  for (const auto& [m, q] : terms_) {
    if (m.weight() != w) return std::nullopt;
  }
  return w;
}

bool SymExpr::is_homogeneous(int w) const {
  return std::all_of(terms_.begin(), terms_.end(), [w](const auto& t) { return t.first.weight() == w; });
}

std::set<Generator> SymExpr::generators() const {
  std::set<Generator> gens;
  for (const auto& [m, q] : terms_) {
    for (const auto& [g, e] : m.factors()) gens.insert(g);
  }
  return gens;
}

SymExpr SymExpr::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  SymExpr result(1L);
  SymExpr base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= SymExpr(base);
  }
  return result;
}

void SymExpr::add_term(const Monomial& m, const mpq_class& coefficient) {
  if (coefficient == 0) return;
  // Callers may pass an unreduced fraction such as mpq_class(3, 3).
  mpq_class q = coefficient;
  q.canonicalize();
  auto [it, inserted] = terms_.try_emplace(m, std::move(q));
  if (!inserted) {
    it->second += coefficient;
    it->second.canonicalize();
    if (it->second == 0) terms_.erase(it);
  }
}

SymExpr& SymExpr::operator+=(const SymExpr& other) {
  for (const auto& [m, q] : other.terms_) add_term(m, q);
  return *this;
}

SymExpr& SymExpr::operator-=(const SymExpr& other) {
  for (const auto& [m, q] : other.terms_) add_term(m, -q);
  return *this;
}

SymExpr& SymExpr::operator*=(const SymExpr& other) {
  *this = *this * other;
  return *this;
}

SymExpr& SymExpr::operator*=(const mpq_class& scale) {
  if (scale == 0) {
    terms_.clear();
  } else {
    mpq_class k = scale;
    k.canonicalize();
    for (auto& [m, q] : terms_) q *= k;
  }
  return *this;
}

SymExpr operator*(const SymExpr& a, const SymExpr& b) {
  SymExpr out;
  for (const auto& [ma, qa] : a.terms_) {
    for (const auto& [mb, qb] : b.terms_) out.add_term(ma * mb, qa * qb);
  }
  return out;
}

SymExpr SymExpr::operator-() const {
  SymExpr out = *this;
  for (auto& [m, q] : out.terms_) q = -q;
  return out;
}

bool operator==(const SymExpr& a, const SymExpr& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto j = b.terms_.begin();
  for (auto i = a.terms_.begin(); i != a.terms_.end(); ++i, ++j) {
    if (!(i->first == j->first) || i->second != j->second) return false;
  }
  return true;
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

std::string rational_to_latex(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "\\tfrac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string SymExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, q] = *it;
    mpq_class mag = abs(q);
    if (it == terms_.rbegin()) {
      if (q < 0) out += '-';
    } else {
      out += q < 0 ? " - " : " + ";
    }
    if (m.is_unit()) {
      out += rational_to_string(mag);
    } else {
      if (mag != 1) out += rational_to_string(mag) + "*";
      out += m.to_string();
    }
  }
  return out;
}

std::string SymExpr::to_latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, q] = *it;
    mpq_class mag = abs(q);
    if (it == terms_.rbegin()) {
      if (q < 0) out += '-';
    } else {
      out += q < 0 ? " - " : " + ";
    }
    if (m.is_unit()) {
      out += rational_to_latex(mag);
    } else {
      if (mag != 1) out += rational_to_latex(mag) + " ";
      out += m.to_latex();
    }
  }
  return out;
}

// --------------------------------------------------------------------- parser

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  SymExpr parse_all() {
    SymExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  mpz_class integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  SymExpr expr() {
    SymExpr out;
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    out = term();
    if (negative) out = -out;
    for (;;) {
      if (accept('+')) {
        out += term();
      } else if (accept('-')) {
        out -= term();
      } else {
        break;
      }
    }
    return out;
  }

  SymExpr term() {
    SymExpr out = power();
    for (;;) {
      if (accept('*')) {
        out *= power();
      } else if (accept('/')) {
        mpz_class den = integer();
        if (den == 0) fail("division by zero");
        out *= mpq_class(mpz_class(1), den);
      } else {
        break;
      }
    }
    return out;
  }

  SymExpr power() {
    SymExpr base = atom();
    if (accept('^')) {
      mpz_class k = integer();
      if (!k.fits_sint_p()) fail("exponent too large");
      base = base.pow(static_cast<int>(k.get_si()));
    }
    return base;
  }

  Composition bracket_composition() {
    if (!accept('[')) fail("expected '['");
    std::size_t close = text_.find(']', pos_);
    if (close == std::string_view::npos) fail("missing ']'");
    Composition comp = Composition::parse(text_.substr(pos_, close - pos_));
    pos_ = close + 1;
    return comp;
  }

  SymExpr atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      SymExpr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      return SymExpr(mpq_class(integer()));
    }
    if (ch == 'c') {
      ++pos_;
      return SymExpr::log2();
    }
    if (ch == 'z') {
      ++pos_;
      try {
        return SymExpr::zeta(bracket_composition());
      } catch (const NotAdmissible& e) {
        throw ParseError(e.what());
      }
    }
    if (ch == 'd') {
      ++pos_;
      return SymExpr::delta(bracket_composition());
    }
    fail(std::string("unexpected character '") + ch + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SymExpr SymExpr::parse(std::string_view text) { return ExprParser(text).parse_all(); }

// ------------------------------------------------------------- free functions

SymExpr sym_add(const SymExpr& a, const SymExpr& b) { return a + b; }

SymExpr sym_mul(const SymExpr& a, const SymExpr& b) { return a * b; }

int sym_weight(const SymExpr& e) {
  auto w = e.weight();
  if (!w) {
    throw NotHomogeneous(e.is_zero() ? "zero expression has no weight"
                                     : "expression mixes weights: " + e.to_string());
  }
  return *w;
}

SymExpr sym_substitute(const SymExpr& e, const Generator& g, const SymExpr& replacement) {
  if (!replacement.is_homogeneous(g.weight())) {
    throw WeightMismatch("replacement for " + g.to_string() + " must have weight " +
                         std::to_string(g.weight()));
  }
  SymExpr out;
  std::map<int, SymExpr> powers;
  for (const auto& [m, q] : e.terms()) {
    int k = m.exponent_of(g);
    if (k == 0) {
      out.add_term(m, q);
      continue;
    }
    auto it = powers.find(k);
    if (it == powers.end()) it = powers.emplace(k, replacement.pow(k)).first;
    out += SymExpr(m.without(g), q) * it->second;
  }
  return out;
}

}  // namespace assoclab
