#include "assoclab/freealg.hpp"

#include <sstream>

namespace assoclab {

namespace {

const SymExpr& zero_expr() {
  static const SymExpr zero;
  return zero;
}

}  // namespace

// ----------------------------------------------------------------------- Word

Word Word::power(Letter l, int k) {
  if (k < 0 || k > max_degree) throw std::invalid_argument("word power out of range");
  Word w;
  for (int i = 0; i < k; ++i) w = w.concat(Word(l));
  return w;
}

Word Word::parse(std::string_view text) {
  if (text == "1") return Word();
  Word w;
  for (char ch : text) {
    if (ch == 'A') {
      w = w.concat(Word(Letter::A));
    } else if (ch == 'B') {
      w = w.concat(Word(Letter::B));
    } else {
      throw ParseError("bad word '" + std::string(text) + "'");
    }
  }
  return w;
}

Word Word::concat(const Word& tail) const {
  if (length_ + tail.length_ > max_degree) throw std::length_error("word too long");
  Word w;
  w.length_ = static_cast<std::uint8_t>(length_ + tail.length_);
  w.bits_ = (bits_ << tail.length_) | tail.bits_;
  return w;
}

Word Word::swapped() const noexcept {
  Word w = *this;
  w.bits_ = ~bits_ & ((1u << length_) - 1u);
  return w;
}

Word Word::reversed() const noexcept {
  Word w;
  w.length_ = length_;
  for (int i = 0; i < length_; ++i) {
    w.bits_ |= ((bits_ >> i) & 1u) << (length_ - 1 - i);
  }
  return w;
}

std::string Word::to_string() const {
  if (length_ == 0) return "1";
  std::string out;
  for (int i = 0; i < length_; ++i) out += to_char((*this)[i]);
  return out;
}

// ------------------------------------------------------------------- NCSeries

NCSeries::NCSeries(int order) : order_(order) {
  if (order < 0 || order > Word::max_degree) throw std::invalid_argument("series order out of range");
}

NCSeries NCSeries::unit(int order) {
  NCSeries s(order);
  s.add(Word(), SymExpr(1L));
  return s;
}

NCSeries NCSeries::letter(Letter l, int order) {
  NCSeries s(order);
  s.add(Word(l), SymExpr(1L));
  return s;
}

NCSeries NCSeries::monomial(const Word& w, const SymExpr& coeff, int order) {
  NCSeries s(order);
  s.add(w, coeff);
  return s;
}

const SymExpr& NCSeries::coeff(const Word& w) const {
  if (w.degree() > order_) {
    throw DegreeTooLarge("word " + w.to_string() + " exceeds series order " + std::to_string(order_));
  }
  auto it = terms_.find(w);
  return it == terms_.end() ? zero_expr() : it->second;
}

void NCSeries::add(const Word& w, const SymExpr& c) {
  if (w.degree() > order_ || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCSeries NCSeries::degree_part(int d) const {
  NCSeries out(order_);
  for (const auto& [w, c] : terms_) {
    if (w.degree() == d) out.terms_.emplace(w, c);
  }
  return out;
}

NCSeries NCSeries::with_order(int order) const {
  NCSeries out(order);
  for (const auto& [w, c] : terms_) {
    if (w.degree() <= order) out.terms_.emplace(w, c);
  }
  return out;
}

void NCSeries::require_same_order(const NCSeries& other) const {
  if (order_ != other.order_) {
    throw OrderMismatch("series orders differ: " + std::to_string(order_) + " vs " +
                        std::to_string(other.order_));
  }
}

NCSeries& NCSeries::operator+=(const NCSeries& other) {
  require_same_order(other);
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

NCSeries& NCSeries::operator-=(const NCSeries& other) {
  require_same_order(other);
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

NCSeries& NCSeries::operator*=(const SymExpr& scale) {
  Terms scaled;
  for (const auto& [w, c] : terms_) {
    SymExpr p = c * scale;
    if (!p.is_zero()) scaled.emplace(w, std::move(p));
  }
  terms_ = std::move(scaled);
  return *this;
}

NCSeries operator*(const NCSeries& a, const NCSeries& b) {
  a.require_same_order(b);
  NCSeries out(a.order_);
  for (const auto& [u, cu] : a.terms_) {
    for (const auto& [v, cv] : b.terms_) {
      // Terms are sorted by degree first.
      if (u.degree() + v.degree() > out.order_) break;
      out.add(u.concat(v), cu * cv);
    }
  }
  return out;
}

NCSeries NCSeries::operator-() const {
  NCSeries out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const NCSeries& a, const NCSeries& b) {
  if (a.order_ != b.order_ || a.terms_.size() != b.terms_.size()) return false;
  auto j = b.terms_.begin();
  for (auto i = a.terms_.begin(); i != a.terms_.end(); ++i, ++j) {
    if (i->first != j->first || !(i->second == j->second)) return false;
  }
  return true;
}

std::string NCSeries::to_string() const {
  if (terms_.empty()) return "0\n";
  std::ostringstream out;
  for (const auto& [w, c] : terms_) out << w.to_string() << ": " << c.to_string() << '\n';
  return out.str();
}

// ------------------------------------------------------------- free functions

NCSeries nc_mul(const NCSeries& a, const NCSeries& b) { return a * b; }

NCSeries nc_inverse(const NCSeries& s) {
  if (!(s.coeff(Word()) == SymExpr(1L))) {
    throw NotUnital("inverse needs constant term 1, got " + s.coeff(Word()).to_string());
  }
  const NCSeries rest = NCSeries::unit(s.order()) - s;
  // Horner form of 1 + d + d^2 + ... + d^order.
  NCSeries result = NCSeries::unit(s.order());
  for (int k = 0; k < s.order(); ++k) result = NCSeries::unit(s.order()) + rest * result;
  return result;
}

NCSeries nc_exp_letter(Letter l, int sign, int n) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (n < 0) throw std::invalid_argument("negative order");
  NCSeries out(n);
  SymExpr coeff(1L);
  const SymExpr step = SymExpr::log2() * mpq_class(sign);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) coeff = coeff * step / mpq_class(k);
    out.add(Word::power(l, k), coeff);
  }
  return out;
}

NCSeries ad_power(Letter actor, Letter argument, int m) {
  if (m < 0) throw std::invalid_argument("ad power must be >= 0");
  const int order = m + 1;
  const NCSeries x = NCSeries::letter(actor, order);
  NCSeries current = NCSeries::letter(argument, order);
  for (int k = 0; k < m; ++k) current = commutator(x, current);
  return current;
}

NCSeries nc_swap(const NCSeries& s) {
  NCSeries out(s.order());
  for (const auto& [w, c] : s.terms()) out.add(w.swapped(), c);
  return out;
}

SymExpr nc_coeff(const NCSeries& s, const Word& w) { return s.coeff(w); }

NCSeries commutator(const NCSeries& a, const NCSeries& b) { return a * b - b * a; }

bool has_weight_grading(const NCSeries& s) {
  for (const auto& [w, c] : s.terms()) {
    if (c.weight() != w.degree()) return false;
  }
  return true;
}

}  // namespace assoclab
