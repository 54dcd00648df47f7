#include "assoclab/io.hpp"

#include <sstream>

namespace assoclab {

Json series_to_json(const NCSeries& s) {
  Json terms = Json::array();
  for (const auto& [w, c] : s.terms()) terms.push_back({{"word", w.to_string()}, {"coeff", c.to_string()}});
  return {{"order", s.order()}, {"terms", std::move(terms)}};
}

Json provenance_to_json(const Provenance& p) {
  Json j = {{"kind", provenance_kind(p)}};
  if (const auto* c = std::get_if<provenance::Comparison>(&p)) {
    j["order"] = c->order;
    j["word"] = c->word.to_string();
  } else if (const auto* s = std::get_if<provenance::Shuffle>(&p)) {
    j["u"] = s->u.indices;
    j["v"] = s->v.indices;
  } else if (const auto* d = std::get_if<provenance::Duality>(&p)) {
    j["comp"] = d->comp.parts();
    j["dual"] = d->dual.parts();
  } else if (const auto* k = std::get_if<provenance::KnownValue>(&p)) {
    j["name"] = k->name;
  }
  return j;
}

Json relation_to_json(const Relation& r) {
  return {{"weight", r.weight()},
          {"provenance", provenance_to_json(r.provenance())},
          {"lhs", r.expr().to_string()},
          {"latex", r.expr().to_latex() + " = 0"}};
}

Json relations_to_json(int order, const std::vector<Relation>& rels) {
  Json list = Json::array();
  for (const auto& r : rels) list.push_back(relation_to_json(r));
  return {{"order", order}, {"count", rels.size()}, {"relations", std::move(list)}};
}

Json verify_report_to_json(int order, const Precision& prec, const std::vector<VerifiedRelation>& rows) {
  Json list = Json::array();
  int passed = 0;
  for (const auto& row : rows) {
    if (row.verification.verdict == Verdict::Pass) ++passed;
    list.push_back({{"provenance", provenance_to_json(row.relation.provenance())},
                    {"lhs", row.relation.expr().to_string()},
                    {"latex", row.relation.expr().to_latex() + " = 0"},
                    {"residual", row.verification.residual.str(6)},
                    {"verdict", to_string(row.verification.verdict)}});
  }
  return {{"order", order},
          {"digits", prec.digits},
          {"passed", passed},
          {"failed", static_cast<int>(rows.size()) - passed},
          {"relations", std::move(list)}};
}

std::string relations_to_latex(const std::vector<Relation>& rels) {
  std::ostringstream out;
  out << "\\begin{alignat}{2}\n";
  for (std::size_t i = 0; i < rels.size(); ++i) {
    out << rels[i].expr().to_latex() << "&=0\\quad&&" << (i + 1 < rels.size() ? ",\\\\" : ".") << '\n';
  }
  out << "\\end{alignat}\n";
  return out.str();
}

std::string relations_to_text(const std::vector<Relation>& rels) {
  std::ostringstream out;
  for (const auto& r : rels) out << r.to_string() << "    [" << describe(r.provenance()) << "]\n";
  return out.str();
}

}  // namespace assoclab
