#include <numeric>

#include "doctest.h"
#include "ringlab/ringspec.hpp"

using namespace ringlab;

namespace {

RawTables zmod_tables(int n) {
  RawTables t;
  t.order = n;
  t.add.resize(static_cast<size_t>(n) * n);
  t.mul.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      t.add[static_cast<size_t>(a) * n + b] = (a + b) % n;
      t.mul[static_cast<size_t>(a) * n + b] = (a * b) % n;
    }
  return t;
}

FinRing make(const std::string& expr) {
  return construct(parse_ring_def_or_expr(expr).spec);
}

}  // namespace

TEST_CASE("modular tables validate") {
  FinRing R = FinRing::validate(zmod_tables(4), "z4");
  CHECK(R.order() == 4);
  CHECK(R.zero() == 0);
  CHECK(R.one() == 1);
  CHECK(R.neg(3) == 1);
  CHECK(R.characteristic() == 4);
}

TEST_CASE("order-1 zero ring is accepted") {
  FinRing R = FinRing::validate(zmod_tables(1), "z1");
  CHECK(R.order() == 1);
  CHECK(R.zero() == R.one());
}

TEST_CASE("corrupted table is rejected with a witness") {
  RawTables t = zmod_tables(4);
  t.mul[2 * 4 + 3] = 1;  // 2*3 = 6 = 2, not 1
  try {
    FinRing::validate(std::move(t), "bad");
    FAIL("expected a validation error");
  } catch (const Error& e) {
    CHECK((e.code() == Errc::NotDistributive ||
           e.code() == Errc::NotAssociative));
    // the message carries a concrete failing triple
    CHECK(std::string(e.what()).find("(") != std::string::npos);
  }
}

TEST_CASE("table with mismatched dimensions is rejected") {
  RawTables t = zmod_tables(3);
  t.add.pop_back();
  CHECK_THROWS_AS(FinRing::validate(std::move(t), "short"), Error);
}

TEST_CASE("constructor orders") {
  CHECK(make("zmod(4)").order() == 4);
  // upper triangular 2x2 over a 2-element ring: one entry per slot
  int slots = 2 * (2 + 1) / 2;
  CHECK(make("uppertri(zmod(2), 2)").order() == 1 << slots);
  CHECK(make("matrix(zmod(2), 2)").order() == 16);
  CHECK(make("uppertri(uppertri(gf(2), 2), 2)").order() == 8 * 8 * 8);
  CHECK(make("product(zmod(4), gf(2))").order() == 8);
}

TEST_CASE("every constructed ring re-validates") {
  for (const char* expr :
       {"zmod(6)", "gf(2, 2)", "matrix(gf(3), 2)", "uppertri(gf(2), 2)",
        "product(zmod(4), zmod(3))", "opposite(uppertri(gf(2), 2))"}) {
    FinRing R = make(expr);
    RawTables t{R.order(), R.add_table(), R.mul_table(), std::nullopt};
    CHECK_NOTHROW(FinRing::validate(std::move(t), R.label()));
  }
}

TEST_CASE("construction is deterministic") {
  FinRing a = make("uppertri(gf(2), 2)");
  FinRing b = make("uppertri(gf(2), 2)");
  CHECK(a.add_table() == b.add_table());
  CHECK(a.mul_table() == b.mul_table());
}

TEST_CASE("gf builds the prime-power fields") {
  FinRing F4 = make("gf(2, 2)");
  CHECK(F4.order() == 4);
  CHECK(F4.characteristic() == 2);
  // reduction by x^2 + x + 1: x*x = x + 1
  CHECK(F4.mul(2, 2) == 3);
  for (Idx a = 1; a < 4; ++a) {
    bool unit = false;
    for (Idx b = 1; b < 4; ++b)
      unit |= F4.mul(a, b) == F4.one() && F4.mul(b, a) == F4.one();
    CHECK(unit);
  }
  FinRing F9 = make("gf(3, 2)");
  CHECK(F9.order() == 9);
  CHECK(F9.characteristic() == 3);

  CHECK_THROWS_AS(make("gf(6)"), Error);
  try {
    make("gf(4)");
    FAIL("gf(4) must be rejected; the field of order 4 is gf(2, 2)");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonPrimeCharacteristic);
  }
}

TEST_CASE("order cap is an error, not a truncation") {
  try {
    make("zmod(5000)");
    FAIL("expected SizeBudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SizeBudgetExceeded);
  }
  CHECK_THROWS_AS(make("matrix(zmod(9), 4)"), Error);
}

TEST_CASE("involutions") {
  FinRing Z6 = make("ring A = zmod(6) with involution identity");
  CHECK(Z6.has_star());
  for (Idx a = 0; a < 6; ++a) CHECK(Z6.star(a) == a);

  FinRing M = make("ring Q = matrix(zmod(3), 2) with involution transpose");
  CHECK(M.has_star());
  // transpose is involutive and reverses products (checked by validate);
  // spot-check one entry: E01 <-> E10
  // digits are (m00, m01, m10, m11), most significant first, base 3
  Idx e01 = 0 * 27 + 1 * 9 + 0 * 3 + 0;
  Idx e10 = 0 * 27 + 0 * 9 + 1 * 3 + 0;
  CHECK(M.star(e01) == e10);

  try {
    make("ring B = matrix(zmod(2), 2) with involution identity");
    FAIL("identity involution on a noncommutative ring must fail");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadInvolution);
    CHECK(std::string(e.what()).find("(ab)*") != std::string::npos);
  }

  FinRing P = make("ring C = product(gf(2), gf(2)) with involution swap");
  CHECK(P.star(1) == 2);  // (0,1) <-> (1,0)
  CHECK(P.star(0) == 0);
  CHECK(P.star(3) == 3);

  // anti-transpose on a triangular ring stays inside the ring
  FinRing T = make("ring D = uppertri(zmod(3), 2) with involution transpose");
  CHECK(T.has_star());
}

TEST_CASE("swap involution requires equal factors") {
  CHECK_THROWS_AS(make("ring X = product(gf(2), gf(3)) with involution swap"),
                  Error);
}

TEST_CASE("parser round trips and reports errors") {
  RingDef d1 = parse_ring_def("ring S = uppertri(gf(2), 2)");
  CHECK(d1.name == "S");
  CHECK(d1.spec.kind == RingSpec::Kind::UpperTri);
  CHECK(d1.spec.args[0].kind == RingSpec::Kind::Gf);
  CHECK(d1.spec.star == StarKind::None);

  RingDef d2 =
      parse_ring_def("ring Q = matrix(gf(3), 2) with involution transpose");
  CHECK(d2.spec.kind == RingSpec::Kind::Matrix);
  CHECK(d2.spec.star == StarKind::Transpose);

  try {
    parse_ring_def("ring X = frobnicate(3)");
    FAIL("expected UnknownConstructor");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownConstructor);
  }

  try {
    parse_ring_def("ring X = zmod(4");
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SyntaxError);
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }

  // print . parse is the identity on well-formed definitions
  for (const char* text :
       {"ring A = zmod(12)", "ring B = gf(3, 2)",
        "ring C = product(zmod(4), gf(2))",
        "ring D = uppertri(uppertri(gf(2), 2), 2)",
        "ring E = opposite(matrix(gf(2), 2))",
        "ring F = matrix(gf(3), 2) with involution transpose",
        "ring G = raw(\"tables.txt\")"}) {
    RingDef def = parse_ring_def(text);
    CHECK(print_statement(def) == text);
    RingDef again = parse_ring_def(print_statement(def));
    CHECK(again.spec == def.spec);
    CHECK(again.name == def.name);
  }

  Program prog = parse_program(
      "# catalog\nring A = zmod(4)\nmodule M over A = cyclic(2)\n"
      "module N over A = sum(free(1), M)");
  CHECK(prog.statements.size() == 3);
  const ModuleDef& m = std::get<ModuleDef>(prog.statements[1]);
  CHECK(m.ring == "A");
  CHECK(m.spec.kind == ModuleSpec::Kind::Cyclic);
  CHECK(m.spec.generators == std::vector<Idx>{2});
  CHECK(print_statement(m) == "module M over A = cyclic(2)");
}

TEST_CASE("fingerprints") {
  // independent counts for Z/4 by direct modular arithmetic
  int idem = 0, units = 0;
  for (int x = 0; x < 4; ++x) {
    if (x * x % 4 == x) ++idem;
    if (std::gcd(x, 4) == 1) ++units;
  }
  Fingerprint fp = fingerprint(make("zmod(4)"));
  CHECK(fp.order == 4);
  CHECK(fp.idempotents == idem);
  CHECK(fp.units == units);
  CHECK(fp.central == 4);
  CHECK(fp.characteristic == 4);

  // isomorphic rings built two ways agree
  CHECK(fingerprint(make("zmod(6)")) ==
        fingerprint(make("product(zmod(2), zmod(3))")));

  // Z/4 and F2 x F2 differ: the product has a single unit (1,1)
  Fingerprint fp22 = fingerprint(make("product(zmod(2), zmod(2))"));
  CHECK(fp22.units == 1);
  CHECK(!(fp == fp22));
}

TEST_CASE("raw table files round trip") {
  FinRing R = make("ring A = product(zmod(2), zmod(3)) with involution identity");
  std::string path = "roundtrip.tables";
  save_raw_tables(R, path);
  RawTables t = load_raw_tables(path);
  FinRing S = FinRing::validate(std::move(t), "reloaded");
  CHECK(S.order() == R.order());
  CHECK(S.add_table() == R.add_table());
  CHECK(S.mul_table() == R.mul_table());
  CHECK(S.star_table() == R.star_table());
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_raw_tables("does-not-exist.tables"), Error);
}

TEST_CASE("opposite ring reverses multiplication") {
  FinRing S = make("uppertri(gf(2), 2)");
  FinRing Op = S.opposite();
  for (Idx a = 0; a < S.order(); ++a)
    for (Idx b = 0; b < S.order(); ++b) CHECK(Op.mul(a, b) == S.mul(b, a));
}
