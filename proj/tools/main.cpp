#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ringlab/report.hpp"
#include "ringlab/search.hpp"

namespace {

using namespace ringlab;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::BudgetExceeded:
    case Errc::SizeBudgetExceeded:
      return 3;
    case Errc::NotRickartAt:
      return 2;
    default:
      return 1;
  }
}

// Positional spec arguments may be a file path, a full statement, or a
// bare constructor expression.
std::string spec_text_from(const std::string& positional,
                           const std::string& inline_text) {
  if (!inline_text.empty()) return inline_text;
  if (positional.empty())
    fail(Errc::InvalidArgument, "no ring spec given (positional or --inline)");
  if (std::filesystem::exists(positional)) {
    std::ifstream in(positional);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
  }
  size_t i = positional.find_first_not_of(" \t");
  if (i != std::string::npos && (positional.compare(i, 5, "ring ") == 0 ||
                                 positional.compare(i, 7, "module ") == 0))
    return positional;
  return "ring R = " + positional;
}

Catalog open_catalog(const std::string& where, const Budgets& budgets) {
  if (where == "builtin") return builtin_catalog(budgets);
  return load_catalog(where, budgets);
}

void emit(const Json& doc, const std::string& text, bool json) {
  if (json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ringlab: exhaustive structure checks for finite rings"};
  app.require_subcommand(1);
  // Global flags remain usable after the subcommand name.
  app.fallthrough();

  Budgets budgets;
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");
  app.add_option("--budget-order", budgets.max_order, "ring order cap");
  app.add_option("--budget-ideals", budgets.max_ideals,
                 "right ideal / submodule count cap");
  app.add_option("--budget-assign", budgets.max_assignments,
                 "backtracking assignment cap");
  app.add_option("--budget-module", budgets.max_module_order,
                 "module order cap");

  std::string positional, inline_text, catalog_where = "builtin";
  long element = -1;
  std::string kind_name = "clean", witness_kind, module_name;
  std::vector<std::string> claim_ids;
  bool run_all = false;
  int jobs = 1;
  std::string where_expr, out_dir;
  SearchConfig search_cfg;

  CLI::App* classify = app.add_subcommand("classify", "full ring report");
  classify->add_option("spec", positional, "spec file or expression");
  classify->add_option("--inline", inline_text, "inline DSL text");

  CLI::App* decompose =
      app.add_subcommand("decompose", "clean-family decompositions");
  decompose->add_option("spec", positional, "spec file or expression");
  decompose->add_option("--inline", inline_text, "inline DSL text");
  decompose->add_option("--element", element, "element index")->required();
  decompose->add_option("--kind", kind_name,
                        "clean | almost_clean | special_clean | "
                        "special_almost_clean | star variants");
  decompose->add_option("--witness", witness_kind,
                        "rickart: emit the annihilator-idempotent witness");

  CLI::App* lattice = app.add_subcommand("lattice", "right ideal lattice");
  lattice->add_option("spec", positional, "spec file or expression");
  lattice->add_option("--inline", inline_text, "inline DSL text");

  CLI::App* module_cmd =
      app.add_subcommand("module", "module structure report");
  module_cmd->add_option("spec", positional, "spec file");
  module_cmd->add_option("--inline", inline_text, "inline DSL text");
  module_cmd->add_option("--name", module_name, "only this module");

  CLI::App* verify = app.add_subcommand("verify", "run claims over a catalog");
  verify->add_option("--catalog", catalog_where, "builtin or a directory");
  verify->add_option("--claim", claim_ids, "claim id (repeatable)");
  verify->add_flag("--all", run_all, "run every claim");
  verify->add_option("--jobs", jobs, "parallel instance workers (0 = auto)");

  CLI::App* search = app.add_subcommand("search", "hunt rings by predicate");
  search->add_option("--where", where_expr, "flag predicate")->required();
  search->add_option("--max-order", search_cfg.max_order, "order bound");
  search->add_option("--max-instances", search_cfg.max_instances,
                     "candidate cap");
  search->add_option("--max-depth", search_cfg.max_depth,
                     "constructor nesting above atoms");
  search->add_option("--out", out_dir, "persist findings to this directory");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();
  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) {
      Catalog cat = catalog_from_program(
          spec_text_from(positional, inline_text), budgets);
      if (cat.rings.empty())
        fail(Errc::InvalidArgument, "no ring statement found");
      Json docs = Json::array();
      std::string text;
      for (const RingInstance& ri : cat.rings) {
        RingAnalysis a(ri.name, ri.ring, budgets);
        Json doc = classify_document(a);
        text += classify_text(doc);
        docs.push_back(std::move(doc));
      }
      emit(cat.rings.size() == 1 ? docs[0] : docs, text, json);
      return 0;
    }

    if (decompose->parsed()) {
      Catalog cat = catalog_from_program(
          spec_text_from(positional, inline_text), budgets);
      if (cat.rings.empty())
        fail(Errc::InvalidArgument, "no ring statement found");
      const FinRing& R = *cat.rings[0].ring;
      if (element < 0 || element >= R.order())
        fail(Errc::InvalidArgument,
             "element index " + std::to_string(element) + " out of range");
      if (witness_kind == "rickart") {
        Decomposition d = rickart_witness(R, static_cast<Idx>(element));
        Json doc;
        doc["ring"] = R.label();
        doc["element"] = element;
        doc["e"] = d.e;
        doc["u"] = d.u;
        emit(doc,
             "e=" + std::to_string(d.e) + " u=" + std::to_string(d.u) + "\n",
             json);
        return 0;
      }
      if (!witness_kind.empty())
        fail(Errc::InvalidArgument,
             "unknown witness kind '" + witness_kind + "'");
      auto kind = decomp_kind_from_name(kind_name);
      if (!kind)
        fail(Errc::InvalidArgument, "unknown kind '" + kind_name + "'");
      auto ds = decompositions(R, static_cast<Idx>(element), *kind);
      Json doc = decompositions_document(R, static_cast<Idx>(element), *kind,
                                         ds);
      emit(doc, decompositions_text(doc), json);
      return 0;
    }

    if (lattice->parsed()) {
      Catalog cat = catalog_from_program(
          spec_text_from(positional, inline_text), budgets);
      if (cat.rings.empty())
        fail(Errc::InvalidArgument, "no ring statement found");
      RingAnalysis a(cat.rings[0].name, cat.rings[0].ring, budgets);
      Json doc = lattice_document(a);
      emit(doc, lattice_text(doc), json);
      return 0;
    }

    if (module_cmd->parsed()) {
      Catalog cat = catalog_from_program(
          spec_text_from(positional, inline_text), budgets);
      Json docs = Json::array();
      std::string text;
      int matched = 0;
      for (const ModuleInstance& mi : cat.modules) {
        if (!mi.def) continue;
        if (!module_name.empty() && mi.name != module_name &&
            mi.def->name != module_name)
          continue;
        ++matched;
        Json doc = module_document(mi.name, *mi.mod, budgets);
        text += module_text(doc);
        docs.push_back(std::move(doc));
      }
      if (!matched)
        fail(Errc::InvalidArgument, "no matching module statement found");
      emit(matched == 1 ? docs[0] : docs, text, json);
      return 0;
    }

    if (verify->parsed()) {
      Catalog cat = open_catalog(catalog_where, budgets);
      std::vector<const Claim*> claims;
      if (run_all || claim_ids.empty()) {
        for (const Claim& c : all_claims()) claims.push_back(&c);
      } else {
        for (const std::string& id : claim_ids) {
          const Claim* c = find_claim(id);
          if (!c) fail(Errc::InvalidArgument, "unknown claim id '" + id + "'");
          claims.push_back(c);
        }
      }
      auto reports = run_claims(claims, cat, budgets, jobs);
      emit(verify_document(reports, cat), verify_text(reports), json);
      return verify_exit_code(reports);
    }

    if (search->parsed()) {
      Predicate pred = Predicate::parse(where_expr);
      SearchResult res = search_counterexamples(pred, search_cfg, budgets);
      if (!out_dir.empty()) persist_findings(res, out_dir);
      Json doc;
      doc["predicate"] = pred.text();
      doc["examined"] = res.examined;
      doc["partial"] = res.partial;
      Json rows = Json::array();
      std::ostringstream text;
      for (const Finding& f : res.findings) {
        Json row;
        row["spec"] = f.name;
        row["fingerprint"] = f.fp.to_string();
        rows.push_back(std::move(row));
        text << f.name << "  " << f.fp.to_string() << "\n";
      }
      doc["findings"] = rows;
      text << res.findings.size() << " finding(s), " << res.examined
           << " candidate(s) examined" << (res.partial ? " [partial]" : "")
           << "\n";
      emit(doc, text.str(), json);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return 1;
}
