#include <filesystem>
#include <fstream>
#include <map>

#include "doctest.h"
#include "ringlab/claims.hpp"
#include "ringlab/report.hpp"

using namespace ringlab;

namespace {

const Catalog& builtin() {
  static const Catalog cat = builtin_catalog(Budgets{});
  return cat;
}

std::map<std::string, Verdict> verdict_map(const ClaimReport& rep) {
  std::map<std::string, Verdict> out;
  for (const InstanceVerdict& r : rep.rows) out[r.instance] = r.verdict;
  return out;
}

}  // namespace

TEST_CASE("builtin catalog composition") {
  const Catalog& cat = builtin();
  CHECK(cat.rings.size() == 27);  // 12 zmod + 3 gf + 5 matrix-ish + 2 products
                                  // + dual numbers + 4 star members
  int star = 0;
  for (const RingInstance& r : cat.rings) star += r.ring->has_star();
  CHECK(star == 4);
  CHECK(!cat.modules.empty());
  CHECK(cat.pairs.size() == 8);
  // gf(2) duplicates zmod(2), so duplicate flagging must fire
  CHECK(!cat.fingerprint_duplicates.empty());
  // the largest member is the 512-element double triangular ring
  int max_order = 0;
  for (const RingInstance& r : cat.rings)
    max_order = std::max(max_order, r.ring->order());
  CHECK(max_order == 512);
}

TEST_CASE("claim registry") {
  for (const char* id :
       {"T-CK", "T-3.1-fwd", "T-3.1-bwd", "P-1.3", "P-2.1", "P-2.2", "C-2.3",
        "P-2.4", "T-2.5", "T-2.6", "C-3.3", "C-3.4", "P-4.1", "C-4.2",
        "C-4.3", "P-4.4", "P-6.1", "T-6.2", "T-6.3", "C-6.4", "INV-C2C3",
        "INV-REG-CS", "INV-FIN-REG"})
    CHECK(find_claim(id) != nullptr);
  CHECK(find_claim("T-FAKE") == nullptr);
  CHECK_THROWS_AS(run_claim("T-FAKE", builtin(), {}), Error);
}

TEST_CASE("T-CK holds everywhere") {
  ClaimReport rep = run_claim("T-CK", builtin(), {});
  CHECK(rep.violated == 0);
  CHECK(rep.holds == static_cast<int>(builtin().rings.size()));
}

TEST_CASE("T-3.1 verdict taxonomy distinguishes vacuous instances") {
  ClaimReport rep = run_claim("T-3.1-fwd", builtin(), {});
  CHECK(rep.violated == 0);
  auto v = verdict_map(rep);
  // Z/4 is abelian but not Rickart: hypothesis not met
  CHECK(v.at("zmod(4)") == Verdict::HypothesisNotMet);
  // Z/6 is abelian and Rickart: the claim holds with witnesses
  CHECK(v.at("zmod(6)") == Verdict::Holds);
  // matrix rings are not abelian
  CHECK(v.at("matrix(gf(2), 2)") == Verdict::HypothesisNotMet);
}

TEST_CASE("INV-FIN-REG holds everywhere") {
  ClaimReport rep = run_claim("INV-FIN-REG", builtin(), {});
  CHECK(rep.violated == 0);
  CHECK(rep.hypothesis_not_met == 0);
  CHECK(rep.holds == static_cast<int>(builtin().rings.size()));
}

TEST_CASE("star claims on the star members") {
  ClaimReport t62 = run_claim("T-6.2", builtin(), {});
  CHECK(t62.violated == 0);
  auto v = verdict_map(t62);
  CHECK(v.at("product(gf(2), gf(2)) with involution swap") == Verdict::Holds);
  CHECK(v.at("matrix(gf(3), 2) with involution transpose") ==
        Verdict::HypothesisNotMet);  // not abelian
  CHECK(t62.rows.size() == 4);       // star scope only

  CHECK(run_claim("T-6.3", builtin(), {}).violated == 0);
  CHECK(run_claim("C-6.4", builtin(), {}).violated == 0);
}

TEST_CASE("embedding pair claims") {
  ClaimReport p21 = run_claim("P-2.1", builtin(), {});
  CHECK(p21.violated == 0);
  auto v = verdict_map(p21);
  CHECK(v.at("zmod(2) in gf(4)") == Verdict::Holds);
  CHECK(v.at("zmod(4) in zmod(4)") == Verdict::Holds);
  // the triangular ring has fewer idempotents than the full matrix ring
  CHECK(v.at("uppertri(gf(2), 2) in matrix(gf(2), 2)") ==
        Verdict::HypothesisNotMet);

  ClaimReport c23 = run_claim("C-2.3", builtin(), {});
  CHECK(c23.violated == 0);
  auto v2 = verdict_map(c23);
  CHECK(v2.at("zmod(2) in gf(4)") == Verdict::Holds);
  // Z/4 is not unit-regular, so the unit-regular hypothesis fails
  CHECK(v2.at("zmod(4) in zmod(4)") == Verdict::HypothesisNotMet);

  ClaimReport p61 = run_claim("P-6.1", builtin(), {});
  CHECK(p61.violated == 0);
  auto v3 = verdict_map(p61);
  CHECK(v3.at("zmod(2) in gf(4) with identity involution") == Verdict::Holds);
  // the swap product is not star-clean, so it fails its own hypothesis
  CHECK(v3.at("product(gf(2), gf(2)) with swap in itself") ==
        Verdict::HypothesisNotMet);
}

TEST_CASE("module claims") {
  ClaimReport p24 = run_claim("P-2.4", builtin(), {});
  CHECK(p24.violated == 0);
  auto v = verdict_map(p24);
  CHECK(v.at("zmod(4) regular") == Verdict::Holds);
  // S as a module over itself is CS but not quasi-continuous
  CHECK(v.at("uppertri(gf(2), 2) regular") == Verdict::HypothesisNotMet);

  ClaimReport p13 = run_claim("P-1.3", builtin(), {});
  CHECK(p13.violated == 0);
  auto v13 = verdict_map(p13);
  CHECK(v13.at("uppertri(gf(2), 2) regular") == Verdict::Holds);  // CS

  CHECK(run_claim("T-2.5", builtin(), {}).violated == 0);
  CHECK(run_claim("INV-C2C3", builtin(), {}).violated == 0);
}

TEST_CASE("skips are reported, never counted as holds") {
  Budgets tiny;
  tiny.max_ideals = 2;
  ClaimReport rep = run_claim("C-3.4", builtin(), tiny);
  CHECK(rep.violated == 0);
  CHECK(rep.skipped > 0);
  // only rings whose lattice fits in two ideals can still be evaluated
  CHECK(rep.holds + rep.hypothesis_not_met + rep.skipped ==
        static_cast<int>(rep.rows.size()));
  CHECK(rep.skipped > rep.holds);
  for (const InstanceVerdict& r : rep.rows)
    if (r.verdict == Verdict::Skipped)
      CHECK(r.witness.find("BudgetExceeded") != std::string::npos);
  std::vector<ClaimReport> reps{rep};
  CHECK(verify_exit_code(reps) == 3);
}

TEST_CASE("violations drive the exit code") {
  std::vector<ClaimReport> reps(1);
  reps[0].rows.push_back({"x", Verdict::Holds, "", 0.0});
  reps[0].tally();
  CHECK(verify_exit_code(reps) == 0);
  reps[0].rows.push_back({"y", Verdict::Violated, "w", 0.0});
  reps[0].tally();
  CHECK(verify_exit_code(reps) == 2);
}

TEST_CASE("reports are deterministic and parallel-stable") {
  std::vector<const Claim*> claims = {find_claim("T-CK"),
                                      find_claim("C-3.3"),
                                      find_claim("INV-C2C3")};
  auto a = run_claims(claims, builtin(), {}, 1);
  auto b = run_claims(claims, builtin(), {}, 4);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    Json ja = claim_report_json(a[i]);
    Json jb = claim_report_json(b[i]);
    for (auto& row : ja["rows"]) row.erase("millis");
    for (auto& row : jb["rows"]) row.erase("millis");
    CHECK(ja == jb);
  }
}

TEST_CASE("catalog io round trip") {
  namespace fs = std::filesystem;
  std::string dir = "catalog_io_test";
  fs::remove_all(dir);
  const Catalog& cat = builtin();
  save_catalog(cat, dir);
  Catalog loaded = load_catalog(dir, {});
  REQUIRE(loaded.rings.size() == cat.rings.size());
  for (size_t i = 0; i < cat.rings.size(); ++i) {
    CAPTURE(cat.rings[i].name);
    CHECK(fingerprint(*loaded.rings[i].ring) ==
          fingerprint(*cat.rings[i].ring));
    CHECK(loaded.rings[i].ring->has_star() == cat.rings[i].ring->has_star());
  }
  CHECK(loaded.modules.size() == cat.modules.size());
  CHECK(!loaded.fingerprint_duplicates.empty());
  fs::remove_all(dir);
}

TEST_CASE("loading a corrupt table names the file") {
  namespace fs = std::filesystem;
  std::string dir = "catalog_corrupt_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  {
    std::ofstream tables(dir + "/bad.tables");
    tables << "order 2\nadd\n0 1\n1 0\nmul\n0 0\n0 0\n";  // no identity
    std::ofstream ring(dir + "/00_bad.ring");
    ring << "ring bad = raw(\"bad.tables\")\n";
  }
  try {
    load_catalog(dir, {});
    FAIL("expected a validation error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("bad") != std::string::npos);
  }
  fs::remove_all(dir);
}

TEST_CASE("isomorphic copies are kept and flagged") {
  Catalog cat = catalog_from_program(
      "ring A = zmod(6)\nring B = product(zmod(2), zmod(3))", {});
  CHECK(cat.rings.size() == 2);
  REQUIRE(cat.fingerprint_duplicates.size() == 1);
  CHECK(cat.fingerprint_duplicates[0] ==
        std::pair<std::string, std::string>{"A", "B"});
}

TEST_CASE("verify document carries the per-row schema") {
  auto reps = run_claims({find_claim("T-CK")}, builtin(), {}, 1);
  Json doc = verify_document(reps, builtin());
  CHECK(doc.contains("catalog"));
  CHECK(doc["violated"] == 0);
  const Json& row = doc["claims"][0]["rows"][0];
  for (const char* key : {"claim", "instance", "verdict", "witness", "millis"})
    CHECK(row.contains(key));
}
