#include "assoclab/relations.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "assoclab/alt_ones.hpp"
#include "assoclab/mzv_side.hpp"

namespace assoclab {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

SymExpr z(std::initializer_list<int> parts) { return SymExpr::zeta(Composition(parts)); }
SymExpr d(std::initializer_list<int> parts) { return SymExpr::delta(Composition(parts)); }
SymExpr q(long num, long den = 1) { return SymExpr(mpq_class(num, den)); }

// All monomials of exactly the given weight over the generators in `gens`
// (ascending), appended in a deterministic order.
void monomials_of_weight(const std::vector<Generator>& gens, std::size_t from, int weight,
                         std::vector<Monomial::Factor>& acc, std::vector<Monomial>& out) {
  if (weight == 0) {
    out.push_back(Monomial::from_factors(acc));
    return;
  }
  for (std::size_t i = from; i < gens.size(); ++i) {
    const int gw = gens[i].weight();
    for (int e = 1; e * gw <= weight; ++e) {
      acc.emplace_back(gens[i], e);
      monomials_of_weight(gens, i + 1, weight - e * gw, acc, out);
      acc.pop_back();
    }
  }
}

}  // namespace

// ----------------------------------------------------------------- provenance

std::string describe(const Provenance& p) {
  return std::visit(
      Overloaded{
          [](const provenance::Comparison& c) {
            return "comparison(order=" + std::to_string(c.order) + ", word=" + c.word.to_string() + ")";
          },
          [](const provenance::Shuffle& s) {
            return "shuffle(u=[" + s.u.to_string() + "], v=[" + s.v.to_string() + "])";
          },
          [](const provenance::Duality& d) {
            return "duality(" + d.comp.to_string() + " <-> " + d.dual.to_string() + ")";
          },
          [](const provenance::KnownValue& k) { return "known(" + k.name + ")"; },
      },
      p);
}

std::string provenance_kind(const Provenance& p) {
  static const char* names[] = {"comparison", "shuffle", "duality", "known"};
  return names[p.index()];
}

// ------------------------------------------------------------------- Relation

SymExpr normalized(const SymExpr& e) {
  const auto* lead = e.leading();
  if (lead == nullptr) return e;
  return e * mpq_class(1 / lead->second);
}

Relation::Relation(const SymExpr& expr, Provenance provenance)
    : expr_(normalized(expr)), weight_(0), provenance_(std::move(provenance)) {
  if (expr_.is_zero()) throw std::invalid_argument("relation is identically zero");
  weight_ = sym_weight(expr_);
}

std::optional<Relation> Relation::nonzero(const SymExpr& expr, Provenance provenance) {
  if (expr.is_zero()) return std::nullopt;
  return Relation(expr, std::move(provenance));
}

// ------------------------------------------------------------------ generators

std::map<IndexWord, int> shuffle(const IndexWord& u, const IndexWord& v) {
  std::map<IndexWord, int> out;
  std::vector<int> acc;
  acc.reserve(u.indices.size() + v.indices.size());
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t j) {
    if (i == u.indices.size() && j == v.indices.size()) {
      ++out[IndexWord(acc)];
      return;
    }
    if (i < u.indices.size()) {
      acc.push_back(u.indices[i]);
      walk(i + 1, j);
      acc.pop_back();
    }
    if (j < v.indices.size()) {
      acc.push_back(v.indices[j]);
      walk(i, j + 1);
      acc.pop_back();
    }
  };
  walk(0, 0);
  return out;
}

std::vector<Relation> shuffle_relations(int max_weight) {
  if (max_weight < 2) throw std::invalid_argument("shuffle relations need max weight >= 2");
  std::vector<IndexWord> words;
  for (int deg = 1; deg < max_weight; ++deg) {
    auto ws = enumerate_index_words(deg);
    words.insert(words.end(), ws.begin(), ws.end());
  }
  std::vector<Relation> out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i; j < words.size(); ++j) {
      if (words[i].degree() + words[j].degree() > max_weight) break;
      SymExpr e = iint_to_sym(words[i]) * iint_to_sym(words[j]);
      for (const auto& [w, mult] : shuffle(words[i], words[j])) e -= iint_to_sym(w) * mpq_class(mult);
      if (auto r = Relation::nonzero(e, provenance::Shuffle{words[i], words[j]})) out.push_back(std::move(*r));
    }
  }
  return out;
}

std::vector<Relation> duality_relations(int max_weight) {
  if (max_weight < 2) throw std::invalid_argument("duality relations need max weight >= 2");
  std::vector<Relation> out;
  std::set<std::pair<Composition, Composition>> seen;
  for (int w = 2; w <= max_weight; ++w) {
    for (const auto& pq : enumerate_pq(w)) {
      Composition a = pq.zeta_index();
      Composition b = pq.dual().zeta_index();
      if (a == b) continue;
      if (b < a) std::swap(a, b);
      if (!seen.emplace(a, b).second) continue;
      out.emplace_back(SymExpr::zeta(a) - SymExpr::zeta(b), provenance::Duality{a, b});
    }
  }
  return out;
}

std::vector<Relation> known_values() {
  const SymExpr c = SymExpr::log2();
  std::vector<std::pair<std::string, SymExpr>> table = {
      {"euler_dilogarithm", z({2}) - q(2) * d({2}) - c.pow(2)},
      {"landen_trilogarithm", d({3}) - (q(7, 8) * z({3}) - q(1, 2) * c * z({2}) + q(1, 6) * c.pow(3))},
      {"delta_2_1", d({2, 1}) - (q(1, 8) * z({3}) - q(1, 6) * c.pow(3))},
      {"delta_1_2", d({1, 2}) - (q(1, 2) * c * z({2}) - q(1, 6) * c.pow(3) - q(1, 4) * z({3}))},
      {"delta_3_1", d({3, 1}) - (q(1, 8) * z({4}) - q(1, 8) * c * z({3}) + q(1, 24) * c.pow(4))},
      {"delta_2_2_alternating_ones", d({2, 2}) - alt_ones_closed_form(4)},
      {"delta_1_2_2_alternating_ones", d({1, 2, 2}) + alt_ones_closed_form(5)},
      {"zeta_3_1_self_dual", z({3, 1}) - q(1, 4) * z({4})},
      {"zeta_4_1", z({4, 1}) - (q(2) * z({5}) - z({2}) * z({3}))},
      {"zeta_3_2", z({3, 2}) - (q(3) * z({3}) * z({2}) - q(11, 2) * z({5}))},
      {"stuffle_2_3", z({2}) * z({3}) - (z({2, 3}) + z({3, 2}) + z({5}))},
      {"zeta_shuffle_2_2", q(1, 2) * z({2}).pow(2) - (q(2) * z({3, 1}) + z({2, 2}))},
      {"zeta_shuffle_2_3", z({2}) * z({3}) - (q(6) * z({4, 1}) + q(3) * z({3, 2}) + z({2, 3}))},
  };
  std::vector<Relation> out;
  out.reserve(table.size());
  for (auto& [name, e] : table) out.emplace_back(e, provenance::KnownValue{name});
  return out;
}

std::vector<Relation> extract_relations(const NCSeries& s1, const NCSeries& s2) {
  if (s1.order() != s2.order()) {
    throw OrderMismatch("cannot compare series of orders " + std::to_string(s1.order()) + " and " +
                        std::to_string(s2.order()));
  }
  std::set<Word> words;
  for (const auto& [w, c] : s1.terms()) words.insert(w);
  for (const auto& [w, c] : s2.terms()) words.insert(w);

  std::vector<Relation> out;
  std::set<SymExpr::Terms> seen;
  for (const Word& w : words) {  // (degree, lex) order
    if (w.degree() < 2) continue;
    SymExpr diff = s1.coeff(w) - s2.coeff(w);
    if (diff.is_zero()) continue;
    Relation r(diff, provenance::Comparison{w.degree(), w});
    if (seen.insert(r.expr().terms()).second) out.push_back(std::move(r));
  }
  return out;
}

std::vector<Relation> aux_relations(int max_weight, AuxSelection selection) {
  std::vector<Relation> out;
  if (selection.shuffle) {
    auto rs = shuffle_relations(max_weight);
    out.insert(out.end(), rs.begin(), rs.end());
  }
  if (selection.duality) {
    auto rs = duality_relations(max_weight);
    out.insert(out.end(), rs.begin(), rs.end());
  }
  if (selection.known) {
    for (auto& r : known_values()) {
      if (r.weight() <= max_weight) out.push_back(std::move(r));
    }
  }
  return out;
}

// ---------------------------------------------------------------- Certificate

std::vector<std::size_t> Certificate::inputs_used() const {
  std::set<std::size_t> ids;
  for (const auto& t : terms) ids.insert(t.input);
  return {ids.begin(), ids.end()};
}

// -------------------------------------------------------------- RelationSpace

std::size_t RelationSpace::add(const Relation& r) {
  std::lock_guard lock(mutex_);
  inputs_.push_back(r);
  cache_.clear();
  return inputs_.size() - 1;
}

void RelationSpace::add(const std::vector<Relation>& rs) {
  std::lock_guard lock(mutex_);
  inputs_.insert(inputs_.end(), rs.begin(), rs.end());
  cache_.clear();
}

namespace {

template <class Map>
void add_scaled(Map& into, const Map& from, const mpq_class& k) {
  for (const auto& [key, v] : from) {
    auto [it, inserted] = into.try_emplace(key, k * v);
    if (!inserted) {
      it->second += k * v;
      if (sgn(it->second) == 0) into.erase(it);
    }
  }
}

}  // namespace

void RelationSpace::eliminate(const Echelon& e, SymExpr& expr, Combination* combo) {
  // Rows are fully reduced, so clearing one pivot never reintroduces another.
  std::vector<Monomial> hits;
  for (const auto& [m, coef] : expr.terms()) {
    if (e.rows.count(m) != 0) hits.push_back(m);
  }
  for (const Monomial& m : hits) {
    const mpq_class k = expr.coefficient(m);
    const Row& row = e.rows.at(m);
    expr -= row.expr * k;
    if (combo != nullptr) add_scaled(*combo, row.combo, mpq_class(-k));
  }
}

void RelationSpace::insert(Echelon& e, SymExpr expr, Combination combo, std::size_t origin) {
  eliminate(e, expr, &combo);
  const auto* lead = expr.leading();
  if (lead == nullptr) return;
  const Monomial pivot = lead->first;
  const mpq_class inv = 1 / lead->second;
  expr *= inv;
  for (auto& [key, v] : combo) v *= inv;
  for (auto& [m, row] : e.rows) {
    const mpq_class k = row.expr.coefficient(pivot);
    if (sgn(k) == 0) continue;
    row.expr -= expr * k;
    add_scaled(row.combo, combo, mpq_class(-k));
  }
  e.rows.emplace(pivot, Row{std::move(expr), std::move(combo), origin});
}

RelationSpace::Echelon RelationSpace::build(int weight, std::set<Generator> alphabet) const {
  Echelon e;
  for (const auto& r : inputs_) {
    const auto gs = r.expr().generators();
    alphabet.insert(gs.begin(), gs.end());
  }
  e.alphabet = alphabet;
  e.input_count = inputs_.size();
  const std::vector<Generator> gens(alphabet.begin(), alphabet.end());

  if (closure_ == Closure::Ideal) {
    // Products with lower-weight relations, smallest relation weight first.
    for (int rw = 1; rw < weight; ++rw) {
      std::vector<Monomial> multipliers;
      std::vector<Monomial::Factor> acc;
      monomials_of_weight(gens, 0, weight - rw, acc, multipliers);
      for (std::size_t i = 0; i < inputs_.size(); ++i) {
        if (inputs_[i].weight() != rw) continue;
        for (const Monomial& m : multipliers) {
          insert(e, inputs_[i].expr() * SymExpr(m), Combination{{Key{i, m}, mpq_class(1)}}, i);
        }
      }
    }
  }
  for (std::size_t i = 0; i < inputs_.size(); ++i) {
    if (inputs_[i].weight() != weight) continue;
    insert(e, inputs_[i].expr(), Combination{{Key{i, Monomial()}, mpq_class(1)}}, i);
  }
  return e;
}

const RelationSpace::Echelon& RelationSpace::echelon(int weight, const std::set<Generator>& extra) const {
  auto it = cache_.find(weight);
  if (it != cache_.end() && it->second.input_count == inputs_.size() &&
      std::includes(it->second.alphabet.begin(), it->second.alphabet.end(), extra.begin(), extra.end())) {
    return it->second;
  }
  std::set<Generator> alphabet = extra;
  if (it != cache_.end()) alphabet.insert(it->second.alphabet.begin(), it->second.alphabet.end());
  Echelon built = build(weight, std::move(alphabet));
  return cache_.insert_or_assign(weight, std::move(built)).first->second;
}

SymExpr RelationSpace::normal_form(const SymExpr& e) const {
  if (e.is_zero()) return e;
  const int w = sym_weight(e);
  std::lock_guard lock(mutex_);
  const Echelon& ech = echelon(w, e.generators());
  SymExpr out = e;
  eliminate(ech, out, nullptr);
  return out;
}

bool RelationSpace::contains(const SymExpr& e) const { return normal_form(e).is_zero(); }

std::optional<Certificate> RelationSpace::certify(const SymExpr& e) const {
  Certificate cert;
  if (e.is_zero()) return cert;
  const int w = sym_weight(e);
  std::lock_guard lock(mutex_);
  const Echelon& ech = echelon(w, e.generators());
  SymExpr rest = e;
  Combination combo;
  eliminate(ech, rest, &combo);
  if (!rest.is_zero()) return std::nullopt;
  // rest = e - sum, so e = -combo.
  for (const auto& [key, v] : combo) cert.terms.push_back({key.input, key.multiplier, mpq_class(-v)});
  return cert;
}

SymExpr RelationSpace::expand(const Certificate& cert) const {
  SymExpr out;
  for (const auto& t : cert.terms) out += inputs_.at(t.input).expr() * SymExpr(t.multiplier, t.coefficient);
  return out;
}

std::vector<std::pair<std::size_t, Relation>> RelationSpace::basis_with_origin(int weight) const {
  std::lock_guard lock(mutex_);
  const Echelon& ech = echelon(weight, {});
  std::vector<std::pair<std::size_t, Relation>> out;
  for (auto it = ech.rows.rbegin(); it != ech.rows.rend(); ++it) {
    out.emplace_back(it->second.origin, Relation(it->second.expr, inputs_[it->second.origin].provenance()));
  }
  return out;
}

std::vector<Relation> RelationSpace::basis(int weight) const {
  std::vector<Relation> out;
  for (auto& [origin, r] : basis_with_origin(weight)) out.push_back(std::move(r));
  return out;
}

std::size_t RelationSpace::dimension(int weight) const {
  std::lock_guard lock(mutex_);
  return echelon(weight, {}).rows.size();
}

std::vector<Relation> reduce(const std::vector<Relation>& rels, const std::vector<Relation>& aux,
                             ReduceOptions options) {
  RelationSpace space(options.closure);
  space.add(aux);
  space.add(rels);
  std::set<int> weights;
  for (const auto& r : rels) weights.insert(r.weight());
  if (!options.primary_only) {
    for (const auto& r : aux) weights.insert(r.weight());
  }
  std::vector<Relation> out;
  for (int w : weights) {
    for (auto& [origin, r] : space.basis_with_origin(w)) {
      if (options.primary_only && origin < aux.size()) continue;
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace assoclab
