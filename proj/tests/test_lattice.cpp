#include <array>
#include <memory>
#include <set>

#include "doctest.h"
#include "ringlab/analysis.hpp"

using namespace ringlab;

namespace {

std::shared_ptr<const FinRing> make(const std::string& expr) {
  return std::make_shared<FinRing>(
      construct(parse_ring_def_or_expr(expr).spec));
}

std::set<std::vector<Idx>> ideal_sets(const IdealLattice& L) {
  std::set<std::vector<Idx>> out;
  for (const ElemSet& s : L.lattice.mods) out.insert(s.elements());
  return out;
}

}  // namespace

TEST_CASE("right ideal lattices of small rings") {
  IdealLattice z4 = right_ideals(make("zmod(4)"), 1000);
  CHECK(z4.count() == 3);
  CHECK(ideal_sets(z4) ==
        std::set<std::vector<Idx>>{{0}, {0, 2}, {0, 1, 2, 3}});

  IdealLattice z6 = right_ideals(make("zmod(6)"), 1000);
  CHECK(z6.count() == 4);
  CHECK(ideal_sets(z6) == std::set<std::vector<Idx>>{
                              {0}, {0, 3}, {0, 2, 4}, {0, 1, 2, 3, 4, 5}});

  CHECK(right_ideals(make("gf(2)"), 1000).count() == 2);
  CHECK(right_ideals(make("gf(2, 2)"), 1000).count() == 2);

  // divisor-lattice oracle for every zmod member
  for (int n = 1; n <= 12; ++n) {
    int divisors = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) ++divisors;
    CHECK(right_ideals(make("zmod(" + std::to_string(n) + ")"), 1000).count() ==
          divisors);
  }
}

TEST_CASE("lattice is closed under sum and intersection") {
  for (const char* expr :
       {"zmod(12)", "uppertri(gf(2), 2)", "matrix(gf(2), 2)",
        "product(zmod(4), gf(2))"}) {
    auto R = make(expr);
    IdealLattice L = right_ideals(R, 100000);
    CAPTURE(expr);
    // contains {0} and R
    CHECK(L.lattice.mods[L.lattice.zero_index].count() == 1);
    CHECK(L.lattice.mods[L.lattice.full_index].count() == R->order());
    for (const ElemSet& a : L.lattice.mods)
      for (const ElemSet& b : L.lattice.mods) {
        CHECK(L.lattice.index_of(submodule_sum(L.rr, a, b)) >= 0);
        CHECK(L.lattice.index_of(a & b) >= 0);
      }
  }
}

TEST_CASE("ideal budget is an error, not a truncation") {
  try {
    right_ideals(make("zmod(12)"), 2);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BudgetExceeded);
  }
}

TEST_CASE("essentiality") {
  auto R = make("zmod(4)");
  IdealLattice L = right_ideals(R, 1000);
  ElemSet zero(4), half(4), whole(4);
  zero.set(0);
  half.set(0);
  half.set(2);
  for (Idx i = 0; i < 4; ++i) whole.set(i);

  CHECK(is_essential_in(L.rr, L.principal, half, whole));
  CHECK(!is_essential_in(L.rr, L.principal, zero, whole));
  CHECK(is_essential_in(L.rr, L.principal, zero, zero));
  for (const ElemSet& I : L.lattice.mods)
    CHECK(is_essential_in(L.rr, L.principal, I, I));
  CHECK_THROWS_AS(is_essential_in(L.rr, L.principal, whole, half), Error);
}

TEST_CASE("summands are the idempotent-generated ideals") {
  auto z4 = make("zmod(4)");
  RingAnalysis a4("z4", z4, {});
  CHECK(a4.summands().indices.size() == 2);  // {0} and R

  auto z6 = make("zmod(6)");
  RingAnalysis a6("z6", z6, {});
  CHECK(a6.summands().indices.size() == 4);  // every ideal, e in {0,1,3,4}

  auto S = make("uppertri(gf(2), 2)");
  RingAnalysis as("S", S, {});
  const SummandInfo& info = as.summands();
  CHECK(info.indices.size() == 5);
  // E11*S = {(a,b,0)} and E22*S = {(0,0,d)} appear; indices are
  // (a,b,d) -> 4a + 2b + d
  std::set<std::vector<Idx>> sets;
  for (int i : info.indices)
    sets.insert(as.ideals().lattice.mods[i].elements());
  CHECK(sets.count({0, 2, 4, 6}) == 1);
  CHECK(sets.count({0, 1}) == 1);
  // idempotent-generated summands match complement search exactly
  auto complements = summand_indices(as.ideals().rr, as.ideals().lattice);
  CHECK(info.indices == complements);
}

TEST_CASE("cs conditions on the worked examples") {
  RingAnalysis z4("z4", make("zmod(4)"), {});
  CHECK(z4.c1());
  CHECK(z4.c3());
  CHECK(z4.quasi_continuous());

  RingAnalysis s("S", make("uppertri(gf(2), 2)"), {});
  CHECK(s.cs());
  CHECK(!s.c3());
  CHECK(!s.quasi_continuous());
  CHECK(s.right_nonsingular().value);

  // fields and semisimple rings satisfy everything
  RingAnalysis m2("M2", make("matrix(gf(2), 2)"), {});
  CHECK(m2.c1());
  CHECK(m2.c2());
  CHECK(m2.c3());
}

TEST_CASE("singular ideals") {
  RingAnalysis z4("z4", make("zmod(4)"), {});
  CHECK(z4.singular_right() == std::vector<Idx>{0, 2});
  CHECK(!z4.right_nonsingular().value);

  RingAnalysis z6("z6", make("zmod(6)"), {});
  CHECK(z6.singular_right() == std::vector<Idx>{0});
  CHECK(z6.right_nonsingular().value);

  RingAnalysis f5("f5", make("gf(5)"), {});
  CHECK(f5.singular_right() == std::vector<Idx>{0});
}

TEST_CASE("ring class flags on Z/4") {
  RingClassReport rep = ring_class(make("zmod(4)"), {});
  CHECK(!rep.vn_regular.value);
  CHECK(rep.vn_regular.counterexample == 2);
  CHECK(!rep.unit_regular.value);
  CHECK(!rep.rickart_right.value);
  CHECK(rep.rickart_right.counterexample == 2);
  CHECK(!rep.rickart_left.value);
  CHECK(rep.morphic_right.value);  // ann(2) = {0,2} and Z4/2Z4 both of order 2
  CHECK(rep.morphic_left.value);
  CHECK(!rep.reduced.value);
  CHECK(rep.cs.c1);
  CHECK(rep.quasi_continuous);
  CHECK(rep.continuous);
  CHECK(rep.ideal_count == 3);
}

TEST_CASE("ring class flags on Z/6") {
  RingClassReport rep = ring_class(make("zmod(6)"), {});
  CHECK(rep.vn_regular.value);
  CHECK(rep.unit_regular.value);
  CHECK(rep.rickart_right.value);
  CHECK(rep.rickart_left.value);
  CHECK(rep.right_nonsingular.value);
  CHECK(rep.reduced.value);
  CHECK(rep.morphic_right.value);
}

TEST_CASE("star regularity of the transpose involution over GF(3)") {
  // independent scan: A^T A = 0 forces A = 0 over GF(3), on 2x2 matrices
  auto decode = [](int idx) {
    return std::array<int, 4>{(idx / 27) % 3, (idx / 9) % 3, (idx / 3) % 3,
                              idx % 3};
  };
  for (int i = 1; i < 81; ++i) {
    auto m = decode(i);
    // A^T A entries: columns dotted with columns
    int c00 = (m[0] * m[0] + m[2] * m[2]) % 3;
    int c11 = (m[1] * m[1] + m[3] * m[3]) % 3;
    int c01 = (m[0] * m[1] + m[2] * m[3]) % 3;
    bool zero = c00 == 0 && c11 == 0 && c01 == 0;
    CHECK(!zero);  // no nonzero matrix satisfies A^T A = 0
  }

  auto M = make("ring Q = matrix(gf(3), 2) with involution transpose");
  RingAnalysis a("M3", M, {});
  CHECK(a.star_regular().value);
  CHECK(a.vn_regular().value);
  CHECK(a.rickart_star().value);
}

TEST_CASE("left-right symmetry through the opposite ring") {
  auto S = make("uppertri(gf(2), 2)");
  auto Sop = std::make_shared<FinRing>(S->opposite());
  RingAnalysis a("S", S, {});
  RingAnalysis b("Sop", Sop, {});
  CHECK(a.rickart_left().value == b.rickart_right().value);
  CHECK(a.rickart_right().value == b.rickart_left().value);
  CHECK(a.left_nonsingular().value == b.right_nonsingular().value);
  CHECK(a.morphic_left().value == b.morphic_right().value);
}

TEST_CASE("abelian rings are Rickart on both sides or neither") {
  for (const char* expr :
       {"zmod(4)", "zmod(6)", "zmod(8)", "zmod(9)", "zmod(12)", "gf(2, 2)",
        "product(zmod(4), gf(2))", "product(gf(2), gf(3))"}) {
    RingAnalysis a(expr, make(expr), {});
    CAPTURE(expr);
    REQUIRE(a.abelian());
    CHECK(a.rickart_right().value == a.rickart_left().value);
  }
}

TEST_CASE("the flag registry answers every advertised name") {
  RingAnalysis a("z6", make("zmod(6)"), {});
  for (const std::string& name : RingAnalysis::flag_names())
    CHECK_NOTHROW(a.flag(name));
  CHECK_THROWS_AS(a.flag("frobnicated"), Error);
  CHECK(a.flag("CS") == a.flag("cs"));
}
