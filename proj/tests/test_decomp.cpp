#include <numeric>

#include "doctest.h"
#include "ringlab/decomp.hpp"
#include "ringlab/ringspec.hpp"

using namespace ringlab;

namespace {

FinRing make(const std::string& expr) {
  return construct(parse_ring_def_or_expr(expr).spec);
}

constexpr DecompKind kClean{CleanFamily::Clean, false};
constexpr DecompKind kSpecialClean{CleanFamily::SpecialClean, false};
constexpr DecompKind kSpecialAlmost{CleanFamily::SpecialAlmostClean, false};

}  // namespace

TEST_CASE("decompositions of 2 in Z/4") {
  FinRing R = make("zmod(4)");
  auto clean = decompositions(R, 2, kClean);
  REQUIRE(clean.size() == 1);
  CHECK(clean[0].e == 1);
  CHECK(clean[0].u == 1);
  CHECK(!clean[0].special);  // 2R meets 1R in 2

  CHECK(decompositions(R, 2, kSpecialAlmost).empty());
  CHECK(decompositions(R, 2, kSpecialClean).empty());
}

TEST_CASE("zero always has the special decomposition e=1, u=-1") {
  for (const char* expr :
       {"zmod(4)", "zmod(6)", "gf(2, 2)", "matrix(gf(2), 2)",
        "uppertri(gf(2), 2)"}) {
    FinRing R = make(expr);
    auto ds = decompositions(R, R.zero(), kSpecialClean);
    bool found = false;
    for (const Decomposition& d : ds)
      if (d.e == R.one() && d.u == R.neg(R.one())) found = true;
    CAPTURE(expr);
    CHECK(found);
  }
}

TEST_CASE("3 in Z/6 decomposes as 4 + 5, specially") {
  FinRing R = make("zmod(6)");
  auto ds = decompositions(R, 3, kSpecialAlmost);
  bool found = false;
  for (const Decomposition& d : ds)
    if (d.e == 4 && d.u == 5) found = true;
  CHECK(found);
  // derivation: 3R = {0,3}, 4R = {0,2,4} meet only in 0, and 5 is a unit
  CHECK(!R.principal_right_ideal(3).meets_outside(R.principal_right_ideal(4),
                                                  R.zero()));
}

TEST_CASE("decomposition flags re-verify through element classification") {
  for (const char* expr :
       {"zmod(4)", "zmod(6)", "zmod(12)", "uppertri(gf(2), 2)",
        "matrix(gf(2), 2)", "gf(2)"}) {
    FinRing R = make(expr);
    ElementClassification cls = classify_elements(R);
    CAPTURE(expr);
    for (Idx a = 0; a < R.order(); ++a)
      for (DecompKind kind : {kClean, kSpecialClean, kSpecialAlmost}) {
        for (const Decomposition& d : decompositions(R, cls, a, kind)) {
          CHECK(R.add(d.e, d.u) == a);
          CHECK(R.mul(d.e, d.e) == d.e);
          CHECK(d.u_is_unit == cls.unit[d.u]);
          CHECK(d.u_is_regular == cls.regular[d.u]);
          if (d.special) {
            // exhaustive soundness scan for aR meet eR = 0
            for (Idx x = 0; x < R.order(); ++x)
              for (Idx y = 0; y < R.order(); ++y)
                if (R.mul(a, x) == R.mul(d.e, y))
                  CHECK(R.mul(a, x) == R.zero());
          }
        }
      }
  }
}

TEST_CASE("cleanness report on Z/4 and Z/6") {
  CleannessReport r4 = classify_cleanness(make("zmod(4)"));
  CHECK(r4.clean.value);
  CHECK(r4.almost_clean.value);
  CHECK(!r4.special_almost_clean.value);
  CHECK(r4.special_almost_clean.counterexample == 2);

  // independent exhaustive check that Z/6 is uniquely special clean:
  // count (e, u) with e^2 = e, gcd(u, 6) = 1, a = e + u, aZ6 meet eZ6 = 0
  for (int a = 0; a < 6; ++a) {
    int count = 0;
    for (int e = 0; e < 6; ++e) {
      if (e * e % 6 != e) continue;
      int u = ((a - e) % 6 + 6) % 6;
      if (std::gcd(u, 6) != 1) continue;
      bool special = true;
      for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y)
          if (a * x % 6 == e * y % 6 && a * x % 6 != 0) special = false;
      if (special) ++count;
    }
    CHECK(count == 1);
  }
  CleannessReport r6 = classify_cleanness(make("zmod(6)"));
  CHECK(r6.uniquely_special_clean.value);
  CHECK(r6.uniquely_special_almost_clean.value);
}

TEST_CASE("matrix ring over GF(2) is special clean") {
  CleannessReport r = classify_cleanness(make("matrix(gf(2), 2)"));
  CHECK(r.special_clean.value);
  CHECK(r.clean.value);
}

TEST_CASE("swap involution kills special almost star cleanness") {
  FinRing P = make("ring C = product(gf(2), gf(2)) with involution swap");
  CleannessReport r = classify_cleanness(P);
  CHECK(r.has_star);
  CHECK(!r.special_almost_star_clean.value);
  CHECK(!r.star_clean.value);
  // (1,0) = index 2 admits no decomposition at all: both candidate
  // complements against the projections (0,0) and (1,1) are zero divisors
  CHECK(decompositions(P, 2, DecompKind{CleanFamily::SpecialAlmostClean, true})
            .empty());
  CHECK(decompositions(P, 2, DecompKind{CleanFamily::AlmostClean, true})
            .empty());
  // but the plain versions are fine: idempotents include (1,0) itself
  CHECK(r.clean.value);
  CHECK(r.special_clean.value);
}

TEST_CASE("star kinds require an involution") {
  FinRing R = make("zmod(4)");
  CHECK_THROWS_AS(
      decompositions(R, 2, DecompKind{CleanFamily::Clean, true}), Error);
}

TEST_CASE("kind names round trip") {
  for (const char* name :
       {"clean", "almost_clean", "special_clean", "special_almost_clean",
        "star_clean", "almost_star_clean", "special_star_clean",
        "special_almost_star_clean"}) {
    auto kind = decomp_kind_from_name(name);
    REQUIRE(kind.has_value());
    CHECK(decomp_kind_name(*kind) == name);
  }
  CHECK(!decomp_kind_from_name("sparkly_clean").has_value());
}

TEST_CASE("rickart witness on Z/6") {
  FinRing R = make("zmod(6)");
  Decomposition d = rickart_witness(R, 3);
  CHECK(d.e == 4);
  CHECK(d.u == 5);
  CHECK(d.u_is_regular);
  CHECK(d.special);
  // ann_r(3) = {0,2,4} = 4R with 4 idempotent
  CHECK(R.right_annihilator(3) == R.principal_right_ideal(4));

  // units get e = 0, zero gets e = 1
  ElementClassification cls = classify_elements(R);
  for (Idx u : cls.unit_list) {
    Decomposition du = rickart_witness(R, u);
    CHECK(du.e == R.zero());
    CHECK(du.u == u);
  }
  Decomposition dz = rickart_witness(R, R.zero());
  CHECK(dz.e == R.one());
  CHECK(dz.u == R.neg(R.one()));
}

TEST_CASE("rickart witness error paths") {
  try {
    rickart_witness(make("zmod(4)"), 2);
    FAIL("Z/4 is not Rickart at 2");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotRickartAt);
  }
  try {
    rickart_witness(make("matrix(gf(2), 2)"), 0);
    FAIL("matrix rings are not abelian");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAbelian);
  }
}
