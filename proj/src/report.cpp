#include "ringlab/report.hpp"

#include <sstream>

namespace ringlab {

Json classify_document(RingAnalysis& a) {
  const FinRing& R = a.ring();
  Json doc;
  doc["ring"] = {{"name", a.name()},
                 {"label", R.label()},
                 {"order", R.order()},
                 {"zero", R.zero()},
                 {"one", R.one()},
                 {"has_star", R.has_star()},
                 {"characteristic", R.characteristic()}};
  Fingerprint fp = fingerprint(R);
  doc["fingerprint"] = {{"order", fp.order},
                        {"idempotents", fp.idempotents},
                        {"units", fp.units},
                        {"central", fp.central},
                        {"characteristic", fp.characteristic},
                        {"token", fp.hash_token()}};
  const ElementClassification& cls = a.elems();
  Json els;
  els["idempotents"] = cls.idempotent_list;
  els["units"] = cls.unit_list;
  if (R.has_star()) els["projections"] = cls.projection_list;
  Json regulars = Json::array();
  for (Idx x = 0; x < R.order(); ++x)
    if (cls.regular[x]) regulars.push_back(x);
  els["regular"] = regulars;
  doc["elements"] = els;

  Json flags;
  for (const std::string& name : RingAnalysis::flag_names()) {
    if (!R.has_star() &&
        (name.find("star") != std::string::npos) && name != "has_star")
      continue;
    flags[name] = a.flag(name);
  }
  doc["flags"] = flags;

  Json witnesses;
  const CleannessReport& c = a.cleanness();
  auto add_w = [&](const char* name, const FlagW& f) {
    if (!f.value && f.counterexample) witnesses[name] = *f.counterexample;
  };
  add_w("clean", c.clean);
  add_w("almost_clean", c.almost_clean);
  add_w("special_clean", c.special_clean);
  add_w("special_almost_clean", c.special_almost_clean);
  add_w("uniquely_special_clean", c.uniquely_special_clean);
  add_w("uniquely_special_almost_clean", c.uniquely_special_almost_clean);
  if (R.has_star()) {
    add_w("star_clean", c.star_clean);
    add_w("almost_star_clean", c.almost_star_clean);
    add_w("special_star_clean", c.special_star_clean);
    add_w("special_almost_star_clean", c.special_almost_star_clean);
    add_w("uniquely_special_star_clean", c.uniquely_special_star_clean);
    add_w("uniquely_special_almost_star_clean",
          c.uniquely_special_almost_star_clean);
    add_w("star_regular", a.star_regular());
    add_w("rickart_star", a.rickart_star());
  }
  add_w("vn_regular", a.vn_regular());
  add_w("unit_regular", a.unit_regular());
  add_w("rickart_right", a.rickart_right());
  add_w("rickart_left", a.rickart_left());
  add_w("right_nonsingular", a.right_nonsingular());
  add_w("left_nonsingular", a.left_nonsingular());
  add_w("reduced", a.reduced());
  add_w("morphic_right", a.morphic_right());
  add_w("morphic_left", a.morphic_left());
  doc["witnesses"] = witnesses;
  doc["ideals"] = {{"count", a.ideals().count()},
                   {"summands", static_cast<int>(a.summands().indices.size())}};
  return doc;
}

std::string classify_text(const Json& doc) {
  std::ostringstream os;
  os << doc["ring"]["label"].get<std::string>() << "  (order "
     << doc["ring"]["order"].get<int>() << ", char "
     << doc["ring"]["characteristic"].get<int>() << ")\n";
  const Json& fp = doc["fingerprint"];
  os << "fingerprint: idempotents=" << fp["idempotents"].get<long>()
     << " units=" << fp["units"].get<long>()
     << " central=" << fp["central"].get<long>() << "\n";
  os << "right ideals: " << doc["ideals"]["count"].get<int>()
     << " (summands: " << doc["ideals"]["summands"].get<int>() << ")\n";
  os << "flags:\n";
  for (const auto& [key, val] : doc["flags"].items()) {
    os << "  " << key << ": " << (val.get<bool>() ? "yes" : "no");
    if (doc["witnesses"].contains(key))
      os << "   [witness " << doc["witnesses"][key].get<int>() << "]";
    os << "\n";
  }
  return os.str();
}

Json claim_report_json(const ClaimReport& rep) {
  Json rows = Json::array();
  for (const InstanceVerdict& r : rep.rows) {
    Json row;
    row["claim"] = rep.claim;
    row["instance"] = r.instance;
    row["verdict"] = verdict_name(r.verdict);
    row["witness"] = r.witness;
    row["millis"] = r.millis;
    rows.push_back(std::move(row));
  }
  Json j;
  j["claim"] = rep.claim;
  j["title"] = rep.title;
  j["catalog"] = rep.catalog_digest;
  j["summary"] = {{"holds", rep.holds},
                  {"hypothesis_not_met", rep.hypothesis_not_met},
                  {"violated", rep.violated},
                  {"skipped", rep.skipped}};
  j["rows"] = rows;
  return j;
}

Json verify_document(const std::vector<ClaimReport>& reps,
                     const Catalog& cat) {
  Json j;
  j["catalog"] = catalog_digest(cat);
  Json dups = Json::array();
  for (const auto& [a, b] : cat.fingerprint_duplicates)
    dups.push_back(Json::array({a, b}));
  j["fingerprint_duplicates"] = dups;
  Json claims = Json::array();
  int violated = 0, skipped = 0;
  for (const ClaimReport& r : reps) {
    claims.push_back(claim_report_json(r));
    violated += r.violated;
    skipped += r.skipped;
  }
  j["claims"] = claims;
  j["violated"] = violated;
  j["skipped"] = skipped;
  j["exit_code"] = violated ? 2 : (skipped ? 3 : 0);
  return j;
}

int verify_exit_code(const std::vector<ClaimReport>& reps) {
  int violated = 0, skipped = 0;
  for (const ClaimReport& r : reps) {
    violated += r.violated;
    skipped += r.skipped;
  }
  return violated ? 2 : (skipped ? 3 : 0);
}

std::string verify_text(const std::vector<ClaimReport>& reps) {
  std::ostringstream os;
  for (const ClaimReport& rep : reps) {
    os << rep.claim << "  " << rep.title << "\n";
    for (const InstanceVerdict& r : rep.rows) {
      os << "  " << r.instance << ": " << verdict_name(r.verdict);
      if (!r.witness.empty()) os << "  -- " << r.witness;
      os << "\n";
    }
    os << "  => holds=" << rep.holds << " hypothesis-not-met="
       << rep.hypothesis_not_met << " violated=" << rep.violated
       << " skipped=" << rep.skipped << "\n";
  }
  return os.str();
}

Json lattice_document(RingAnalysis& a) {
  const IdealLattice& L = a.ideals();
  const SummandInfo& s = a.summands();
  Json doc;
  doc["ring"] = a.ring().label();
  doc["count"] = L.count();
  doc["complete"] = L.complete;
  Json ideals = Json::array();
  for (int i = 0; i < L.count(); ++i) {
    Json ideal;
    ideal["index"] = i;
    ideal["size"] = L.lattice.mods[i].count();
    ideal["elements"] = L.lattice.mods[i].elements();
    auto it = s.generating_idempotents.find(i);
    ideal["summand"] = it != s.generating_idempotents.end();
    if (it != s.generating_idempotents.end())
      ideal["idempotents"] = it->second;
    ideals.push_back(std::move(ideal));
  }
  doc["ideals"] = ideals;
  doc["flags"] = {{"c1", a.c1()},
                  {"c2", a.c2()},
                  {"c3", a.c3()},
                  {"cs", a.cs()},
                  {"quasi_continuous", a.quasi_continuous()},
                  {"continuous", a.continuous()}};
  return doc;
}

std::string lattice_text(const Json& doc) {
  std::ostringstream os;
  os << doc["ring"].get<std::string>() << ": " << doc["count"].get<int>()
     << " right ideals\n";
  for (const auto& ideal : doc["ideals"]) {
    os << "  #" << ideal["index"].get<int>() << " size "
       << ideal["size"].get<int>() << " {";
    bool first = true;
    for (const auto& e : ideal["elements"]) {
      os << (first ? "" : ",") << e.get<int>();
      first = false;
    }
    os << "}";
    if (ideal["summand"].get<bool>()) {
      os << "  summand, idempotents {";
      first = true;
      for (const auto& e : ideal["idempotents"]) {
        os << (first ? "" : ",") << e.get<int>();
        first = false;
      }
      os << "}";
    }
    os << "\n";
  }
  const Json& f = doc["flags"];
  os << "C1=" << (f["c1"].get<bool>() ? "yes" : "no")
     << " C2=" << (f["c2"].get<bool>() ? "yes" : "no")
     << " C3=" << (f["c3"].get<bool>() ? "yes" : "no")
     << "  CS=" << (f["cs"].get<bool>() ? "yes" : "no")
     << " quasi_continuous="
     << (f["quasi_continuous"].get<bool>() ? "yes" : "no") << " continuous="
     << (f["continuous"].get<bool>() ? "yes" : "no") << "\n";
  return os.str();
}

Json module_document(const std::string& name, const FinModule& M,
                     const Budgets& b) {
  ModuleClassReport rep = module_class(M, b);
  Json doc;
  doc["module"] = name.empty() ? M.label() : name;
  doc["ring"] = M.ring().label();
  doc["order"] = rep.order;
  doc["submodules"] = rep.submodule_count;
  doc["summands"] = rep.summand_count;
  doc["end_order"] = rep.end_order;
  doc["flags"] = {{"c1", rep.cs.c1},
                  {"c2", rep.cs.c2},
                  {"c3", rep.cs.c3},
                  {"cs", rep.cs.c1},
                  {"quasi_continuous", rep.quasi_continuous},
                  {"continuous", rep.continuous},
                  {"nonsingular", rep.nonsingular},
                  {"clean", rep.clean},
                  {"almost_clean", rep.almost_clean}};
  doc["singular"] = rep.singular;
  return doc;
}

std::string module_text(const Json& doc) {
  std::ostringstream os;
  os << doc["module"].get<std::string>() << " over "
     << doc["ring"].get<std::string>() << "  (order "
     << doc["order"].get<int>() << ")\n";
  os << "submodules: " << doc["submodules"].get<int>() << " (summands "
     << doc["summands"].get<int>() << "), End order "
     << doc["end_order"].get<int>() << "\n";
  os << "flags:\n";
  for (const auto& [key, val] : doc["flags"].items())
    os << "  " << key << ": " << (val.get<bool>() ? "yes" : "no") << "\n";
  os << "singular submodule: {";
  bool first = true;
  for (const auto& e : doc["singular"]) {
    os << (first ? "" : ",") << e.get<int>();
    first = false;
  }
  os << "}\n";
  return os.str();
}

Json decompositions_document(const FinRing& R, Idx a, DecompKind kind,
                             const std::vector<Decomposition>& ds) {
  Json doc;
  doc["ring"] = R.label();
  doc["element"] = a;
  doc["kind"] = decomp_kind_name(kind);
  Json rows = Json::array();
  for (const Decomposition& d : ds) {
    Json row;
    row["e"] = d.e;
    row["u"] = d.u;
    row["u_is_unit"] = d.u_is_unit;
    row["u_is_regular"] = d.u_is_regular;
    row["special"] = d.special;
    row["e_is_projection"] = d.e_is_projection;
    rows.push_back(std::move(row));
  }
  doc["decompositions"] = rows;
  return doc;
}

std::string decompositions_text(const Json& doc) {
  std::ostringstream os;
  os << doc["ring"].get<std::string>() << " element "
     << doc["element"].get<int>() << " kind "
     << doc["kind"].get<std::string>() << ":\n";
  if (doc["decompositions"].empty()) {
    os << "  none\n";
    return os.str();
  }
  for (const auto& row : doc["decompositions"]) {
    os << "  e=" << row["e"].get<int>() << " u=" << row["u"].get<int>();
    if (row["u_is_unit"].get<bool>()) os << " (u unit)";
    else if (row["u_is_regular"].get<bool>()) os << " (u regular)";
    if (row["special"].get<bool>()) os << " (special)";
    os << "\n";
  }
  return os.str();
}

}  // namespace ringlab
