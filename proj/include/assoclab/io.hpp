#pragma once

// JSON, LaTeX and text renderings of series, relations and reports.

#include <json.hpp>

#include <string>
#include <vector>

#include "assoclab/freealg.hpp"
#include "assoclab/numeric.hpp"
#include "assoclab/relations.hpp"

namespace assoclab {

using Json = nlohmann::ordered_json;

/// {"order": N, "terms": [{"word": "BA", "coeff": "z[2]"}, ...]} in (degree, lex) order.
Json series_to_json(const NCSeries& s);

Json provenance_to_json(const Provenance& p);

/// {"weight", "provenance", "lhs", "latex"}
Json relation_to_json(const Relation& r);

/// {"order": N, "count": k, "relations": [...]}
Json relations_to_json(int order, const std::vector<Relation>& rels);

struct VerifiedRelation {
  Relation relation;
  Verification verification;
};

/// {"order", "digits", "passed", "failed", "relations": [{"provenance", "lhs", "latex", "residual", "verdict"}]}
Json verify_report_to_json(int order, const Precision& prec, const std::vector<VerifiedRelation>& rows);

/// One alignat environment, one relation per line, "lhs &= 0".
std::string relations_to_latex(const std::vector<Relation>& rels);

/// One "lhs = 0    [provenance]" line per relation.
std::string relations_to_text(const std::vector<Relation>& rels);

}  // namespace assoclab
