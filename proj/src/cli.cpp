#include "assoclab/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "assoclab/delta_side.hpp"
#include "assoclab/io.hpp"
#include "assoclab/mzv_side.hpp"
#include "assoclab/numeric.hpp"
#include "assoclab/selftest.hpp"

namespace assoclab {

namespace {

void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (config.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.output, std::ios::binary);
  if (!file) throw UsageError("cannot write " + config.output);
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<Relation> comparison_relations(int order) {
  if (order < 2) return {};
  return extract_relations(phi_mzv(order), phi_delta(order));
}

std::vector<Relation> selected_aux(int order, const AuxSelection& sel) {
  if (order < 2 || !(sel.shuffle || sel.duality || sel.known)) return {};
  return aux_relations(order, sel);
}

int run_expand(const RunConfig& config, std::ostream& out) {
  std::optional<NCSeries> mzv, delta;
  if (config.side != Side::Delta) mzv = phi_mzv(config.order);
  if (config.side != Side::Mzv) delta = phi_delta(config.order);
  if (config.format == Format::Latex) throw UsageError("expand supports json and text output");
  if (config.format == Format::Text) {
    std::string text;
    if (mzv && delta) {
      text = "mzv:\n" + mzv->to_string() + "delta:\n" + delta->to_string();
    } else {
      text = (mzv ? *mzv : *delta).to_string();
    }
    emit(config, out, text);
    return exit_ok;
  }
  if (mzv && delta) {
    emit(config, out, dump(Json{{"mzv", series_to_json(*mzv)}, {"delta", series_to_json(*delta)}}));
  } else {
    emit(config, out, dump(series_to_json(mzv ? *mzv : *delta)));
  }
  return exit_ok;
}

int run_relations(const RunConfig& config, std::ostream& out) {
  std::vector<Relation> rels = comparison_relations(config.order);
  std::vector<Relation> aux = selected_aux(config.order, config.aux);
  if (config.reduce) {
    rels = reduce(rels, aux, ReduceOptions{Closure::Ideal, config.primary_only});
  } else {
    rels.insert(rels.end(), aux.begin(), aux.end());
  }
  switch (config.format) {
    case Format::Json:
      emit(config, out, dump(relations_to_json(config.order, rels)));
      break;
    case Format::Latex:
      emit(config, out, relations_to_latex(rels));
      break;
    case Format::Text:
      emit(config, out, relations_to_text(rels));
      break;
  }
  return exit_ok;
}

int run_verify(const RunConfig& config, std::ostream& out) {
  const Precision prec(config.digits);
  std::vector<VerifiedRelation> rows;
  if (config.expr) {
    const SymExpr e = SymExpr::parse(*config.expr);
    if (e.is_zero()) throw UsageError("expression is identically zero");
    Relation r(e, provenance::KnownValue{"user"});
    rows.push_back({r, verify_relation(r, prec)});
  } else {
    std::vector<Relation> rels = comparison_relations(config.order);
    std::vector<Relation> aux = selected_aux(config.order, config.aux);
    rels.insert(rels.end(), aux.begin(), aux.end());
    for (const auto& r : rels) rows.push_back({r, verify_relation(r, prec)});
  }
  const Json report = verify_report_to_json(config.order, prec, rows);
  if (!config.report.empty()) {
    std::ofstream file(config.report, std::ios::binary);
    if (!file) throw UsageError("cannot write " + config.report);
    file << dump(report);
  }
  if (config.format == Format::Json) {
    emit(config, out, dump(report));
  } else {
    std::ostringstream text;
    for (const auto& row : rows) {
      text << to_string(row.verification.verdict) << "  residual " << row.verification.residual.str(6) << "  "
           << row.relation.to_string() << "  [" << describe(row.relation.provenance()) << "]\n";
    }
    text << report["passed"].get<int>() << " passed, " << report["failed"].get<int>() << " failed\n";
    emit(config, out, text.str());
  }
  return report["failed"].get<int>() == 0 ? exit_ok : exit_verification_failed;
}

int run_eval(const RunConfig& config, std::ostream& out) {
  const int targets = static_cast<int>(config.zeta.has_value()) + static_cast<int>(config.delta.has_value()) +
                      static_cast<int>(config.expr.has_value()) + static_cast<int>(config.alt_ones.has_value()) +
                      static_cast<int>(config.log2);
  if (targets != 1) throw UsageError("eval needs exactly one of --zeta, --delta, --expr, --alt-ones, --log2");
  const Precision prec(config.digits);
  Json j;
  BigReal value;
  if (config.zeta) {
    j["target"] = "z[" + config.zeta->to_string() + "]";
    value = eval_zeta(*config.zeta, prec);
  } else if (config.delta) {
    j["target"] = "d[" + config.delta->to_string() + "]";
    value = eval_delta(*config.delta, prec);
  } else if (config.expr) {
    const SymExpr e = SymExpr::parse(*config.expr);
    j["target"] = e.to_string();
    value = eval_symexpr(e, prec);
  } else if (config.alt_ones) {
    if (*config.alt_ones < 1) throw UsageError("--alt-ones needs n >= 1");
    AltOnesValue v = eval_alt_ones(*config.alt_ones, prec);
    j["target"] = "alt_ones(" + std::to_string(*config.alt_ones) + ")";
    j["closed_form"] = v.closed_form.to_string();
    value = v.value;
  } else {
    j["target"] = "c";
    value = eval_log2(prec);
  }
  j["digits"] = config.digits;
  j["value"] = value.str();
  if (config.format == Format::Json) {
    emit(config, out, dump(j));
  } else {
    emit(config, out, value.str() + "\n");
  }
  return exit_ok;
}

int run_selftest_command(const RunConfig& config, std::ostream& out) {
  const auto results = run_selftest(config.order);
  std::ostringstream text;
  int failed = 0;
  for (const auto& r : results) {
    text << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) {
      text << ": " << r.detail;
      ++failed;
    }
    text << '\n';
  }
  text << results.size() - failed << " passed, " << failed << " failed\n";
  emit(config, out, text.str());
  return failed == 0 ? exit_ok : exit_verification_failed;
}

Composition parse_composition_option(const std::string& text) {
  try {
    return Composition::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad composition: ") + e.what());
  }
}

}  // namespace

int max_order() {
  const char* env = std::getenv("ASSOCLAB_MAX_ORDER");
  if (env == nullptr) return 6;
  try {
    std::size_t used = 0;
    const int v = std::stoi(env, &used);
    if (used == std::string(env).size() && v >= 0 && v <= Word::max_degree) return v;
  } catch (const std::exception&) {
  }
  return 6;
}

AuxSelection parse_aux(const std::string& text) {
  if (text == "all") return {};
  AuxSelection sel{false, false, false};
  if (text == "none") return sel;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "shuffle") {
      sel.shuffle = true;
    } else if (item == "duality") {
      sel.duality = true;
    } else if (item == "known") {
      sel.known = true;
    } else {
      throw UsageError("unknown aux set '" + item + "' (expected shuffle, duality, known, all or none)");
    }
  }
  return sel;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const int cap = max_order();
    if (config.order < 0 || config.order > cap) {
      throw UsageError("order must lie in 0.." + std::to_string(cap) + " (ASSOCLAB_MAX_ORDER)");
    }
    if (config.digits < 10) throw UsageError("digits must be >= 10");
    switch (config.command) {
      case Command::Expand:
        return run_expand(config, out);
      case Command::Relations:
        return run_relations(config, out);
      case Command::Verify:
        return run_verify(config, out);
      case Command::Eval:
        return run_eval(config, out);
      case Command::Selftest:
        return run_selftest_command(config, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const NotAdmissible& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Associator series comparison: relations between zeta values and polylogarithms at 1/2"};
  app.require_subcommand(1);

  RunConfig config;
  std::string side = "both", format, aux = "all";
  std::string zeta, delta, expr;
  int alt_ones = 0;

  const std::map<std::string, Format> formats = {{"json", Format::Json}, {"latex", Format::Latex}, {"text", Format::Text}};
  const std::map<std::string, Side> sides = {{"mzv", Side::Mzv}, {"delta", Side::Delta}, {"both", Side::Both}};

  auto common = [&](CLI::App* sub, bool with_order) {
    if (with_order) sub->add_option("--order,-n", config.order, "Truncation order")->capture_default_str();
    sub->add_option("--format,-f", format, "json, latex or text")->check(CLI::IsMember({"json", "latex", "text"}));
    sub->add_option("--output,-o", config.output, "Write to this file instead of standard output");
  };

  auto* expand = app.add_subcommand("expand", "Print an associator series");
  common(expand, true);
  expand->add_option("--side", side, "mzv, delta or both")->check(CLI::IsMember({"mzv", "delta", "both"}));

  auto* relations = app.add_subcommand("relations", "Extract relations by comparing the two series");
  common(relations, true);
  relations->add_option("--aux", aux, "Auxiliary sets: shuffle,duality,known | all | none")->capture_default_str();
  relations->add_flag("--reduce", config.reduce, "Reduce to row-echelon form");
  relations->add_flag("--primary-only", config.primary_only, "With --reduce, report only rows introduced by the comparison");

  auto* verify = app.add_subcommand("verify", "Numerically certify the extracted and auxiliary relations");
  common(verify, true);
  verify->add_option("--digits,-d", config.digits, "Decimal digits")->capture_default_str();
  verify->add_option("--aux", aux, "Auxiliary sets: shuffle,duality,known | all | none")->capture_default_str();
  verify->add_option("--report", config.report, "Also write the JSON report here");
  verify->add_option("--expr", expr, "Verify a single expression instead");

  auto* eval = app.add_subcommand("eval", "Evaluate a value to high precision");
  common(eval, false);
  eval->add_option("--digits,-d", config.digits, "Decimal digits")->capture_default_str();
  auto* zeta_opt = eval->add_option("--zeta", zeta, "Composition, e.g. 3,1");
  auto* delta_opt = eval->add_option("--delta", delta, "Composition, e.g. 2,1,1");
  auto* expr_opt = eval->add_option("--expr", expr, "Expression, e.g. \"z[2] - 2*d[2] - c^2\"");
  auto* alt_opt = eval->add_option("--alt-ones", alt_ones, "Li_{1,...,1}(-1,...,-1) with n ones");
  eval->add_flag("--log2", config.log2, "ln 2");

  auto* selftest = app.add_subcommand("selftest", "Run the built-in invariant suites");
  common(selftest, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (expand->parsed()) {
      config.command = Command::Expand;
      config.side = sides.at(side);
    } else if (relations->parsed()) {
      config.command = Command::Relations;
      config.aux = parse_aux(aux);
    } else if (verify->parsed()) {
      config.command = Command::Verify;
      config.aux = parse_aux(aux);
      if (verify->count("--expr") != 0) config.expr = expr;
    } else if (eval->parsed()) {
      config.command = Command::Eval;
      if (zeta_opt->count() != 0) config.zeta = parse_composition_option(zeta);
      if (delta_opt->count() != 0) config.delta = parse_composition_option(delta);
      if (expr_opt->count() != 0) config.expr = expr;
      if (alt_opt->count() != 0) config.alt_ones = alt_ones;
    } else {
      config.command = Command::Selftest;
    }
    if (format.empty()) {
      const bool structured = config.command == Command::Expand || config.command == Command::Relations;
      format = structured ? "json" : "text";
    }
    config.format = formats.at(format);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return run(config, out, err);
}

}  // namespace assoclab
