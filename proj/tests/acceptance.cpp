// Acceptance suite: one criterion per section, one PASS/FAIL line each.
// Every bound (flag values, witnesses, wall-clock limits) is pinned here.

#include <chrono>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "ringlab/claims.hpp"
#include "ringlab/report.hpp"

using namespace ringlab;

namespace {

struct Harness {
  int failures = 0;
  std::vector<std::string> lines;

  void criterion(int number, const std::string& what, bool ok,
                 double seconds, double limit_seconds) {
    bool in_time = limit_seconds <= 0 || seconds <= limit_seconds;
    bool pass = ok && in_time;
    char buf[512];
    std::snprintf(buf, sizeof(buf), "criterion %2d: %s — %s (%.2fs%s)",
                  number, pass ? "PASS" : "FAIL", what.c_str(), seconds,
                  in_time ? "" : " OVER TIME LIMIT");
    lines.push_back(buf);
    std::puts(buf);
    std::fflush(stdout);
    if (!pass) ++failures;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::shared_ptr<const FinRing> make(const std::string& expr) {
  return std::make_shared<FinRing>(
      construct(parse_ring_def_or_expr(expr).spec));
}

bool claim_clean(const std::string& id, const Catalog& cat, const Budgets& b) {
  ClaimReport rep = run_claim(id, cat, b);
  return rep.violated == 0 && rep.skipped == 0;
}

}  // namespace

int main() {
  Harness h;
  Budgets budgets;  // defaults throughout
  const Catalog cat = builtin_catalog(budgets);

  // 1. Z/4: clean, almost clean, not special almost clean (witness 2 whose
  //    unique clean decomposition is e=1, u=1), quasi-continuous, not right
  //    nonsingular, not Rickart, not vn-regular. Under one second.
  {
    auto t0 = std::chrono::steady_clock::now();
    RingAnalysis a("zmod(4)", make("zmod(4)"), budgets);
    const CleannessReport& c = a.cleanness();
    bool ok = c.clean.value && c.almost_clean.value &&
              !c.special_almost_clean.value &&
              c.special_almost_clean.counterexample == 2;
    auto ds = decompositions(a.ring(), a.elems(), 2,
                             DecompKind{CleanFamily::Clean, false});
    ok = ok && ds.size() == 1 && ds[0].e == 1 && ds[0].u == 1;
    ok = ok && decompositions(a.ring(), a.elems(), 2,
                              DecompKind{CleanFamily::SpecialAlmostClean,
                                         false})
                   .empty();
    ok = ok && a.quasi_continuous() && !a.right_nonsingular().value &&
         !a.rickart() && !a.vn_regular().value;
    h.criterion(1, "Z/4 classification matches the worked example", ok,
                seconds_since(t0), 1.0);
  }

  // 2. S = uppertri(gf(2), 2): CS, right nonsingular, not quasi-continuous,
  //    clean. Under five seconds.
  {
    auto t0 = std::chrono::steady_clock::now();
    RingAnalysis a("S", make("uppertri(gf(2), 2)"), budgets);
    bool ok = a.cs() && a.right_nonsingular().value &&
              !a.quasi_continuous() && a.cleanness().clean.value;
    h.criterion(2, "uppertri(gf(2), 2) is CS, nonsingular, not "
                   "quasi-continuous, clean",
                ok, seconds_since(t0), 5.0);
  }

  // 3. R = uppertri(S, 2), order 512: not CS, clean. Within five minutes
  //    under default budgets.
  {
    auto t0 = std::chrono::steady_clock::now();
    RingAnalysis a("R", make("uppertri(uppertri(gf(2), 2), 2)"), budgets);
    bool ok = a.ring().order() == 512 && !a.cs() &&
              a.cleanness().clean.value;
    h.criterion(3, "uppertri(uppertri(gf(2), 2), 2) is clean but not CS", ok,
                seconds_since(t0), 300.0);
  }

  // 4. T-CK over the whole builtin catalog, zero violations, two minutes.
  {
    auto t0 = std::chrono::steady_clock::now();
    ClaimReport rep = run_claim("T-CK", cat, budgets);
    bool ok = rep.violated == 0 && rep.skipped == 0 &&
              rep.holds == static_cast<int>(cat.rings.size());
    h.criterion(4, "unit-regular iff special clean across the catalog", ok,
                seconds_since(t0), 120.0);
  }

  // 5. T-3.1 both directions, plus the constructive witness re-verified on
  //    every element of every abelian Rickart catalog ring.
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = claim_clean("T-3.1-fwd", cat, budgets) &&
              claim_clean("T-3.1-bwd", cat, budgets);
    int rickart_rings = 0;
    for (const RingInstance& ri : cat.rings) {
      RingAnalysis a(ri.name, ri.ring, budgets);
      if (!a.abelian() || !a.rickart()) continue;
      ++rickart_rings;
      for (Idx x = 0; x < a.ring().order() && ok; ++x) {
        try {
          Decomposition d = rickart_witness(a.ring(), a.elems(), x);
          ok = ok && a.ring().add(d.e, d.u) == x && d.u_is_regular &&
               d.special;
        } catch (const Error&) {
          ok = false;
        }
      }
    }
    ok = ok && rickart_rings > 0;
    h.criterion(5, "abelian Rickart iff special almost clean, witnesses "
                   "re-verified",
                ok, seconds_since(t0), 0);
  }

  // 6. Uniqueness claims.
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = claim_clean("P-4.1", cat, budgets) &&
              claim_clean("C-4.2", cat, budgets) &&
              claim_clean("C-4.3", cat, budgets);
    h.criterion(6, "uniqueness of special (almost) clean decompositions", ok,
                seconds_since(t0), 0);
  }

  // 7. Quasi-continuous nonsingular rings are Rickart on both sides, with
  //    at least one ring genuinely exercising the hypothesis.
  {
    auto t0 = std::chrono::steady_clock::now();
    ClaimReport rep = run_claim("C-3.4", cat, budgets);
    bool ok = rep.violated == 0 && rep.skipped == 0 && rep.holds > 0;
    h.criterion(7, "quasi-continuous nonsingular rings are two-sided Rickart",
                ok, seconds_since(t0), 0);
  }

  // 8. Star catalog: T-6.2, T-6.3, C-6.4 clean; the swapped product of two
  //    copies of GF(2) is Rickart yet not a Rickart star ring, with (1,0)
  //    admitting no special almost star-clean decomposition.
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = claim_clean("T-6.2", cat, budgets) &&
              claim_clean("T-6.3", cat, budgets) &&
              claim_clean("C-6.4", cat, budgets);
    auto swap =
        make("ring P = product(gf(2), gf(2)) with involution swap");
    RingAnalysis a("swap", swap, budgets);
    Idx one_zero = 2;  // (1,0) under the left-major pair indexing
    ok = ok && a.rickart() && !a.rickart_star().value &&
         !a.cleanness().special_almost_star_clean.value &&
         decompositions(a.ring(), a.elems(), one_zero,
                        DecompKind{CleanFamily::SpecialAlmostClean, true})
             .empty();
    h.criterion(8, "star catalog: Rickart star iff special almost star-clean",
                ok, seconds_since(t0), 0);
  }

  // 9. Module suite: C2 implies C3 on every catalog module; P-2.4 and
  //    T-2.5 clean; End of the regular module matches the ring tablewise
  //    for every catalog ring of order at most 16. Two minutes.
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = claim_clean("INV-C2C3", cat, budgets) &&
              claim_clean("P-2.4", cat, budgets) &&
              claim_clean("T-2.5", cat, budgets);
    for (const RingInstance& ri : cat.rings) {
      if (ri.ring->order() > 16 || !ok) continue;
      FinModule M = regular_module(ri.ring);
      EndRing E = endomorphism_ring(M, budgets);
      ok = ok && E.ring.order() == ri.ring->order();
      std::vector<Idx> val(ri.ring->order());
      std::vector<int> to_end(ri.ring->order());
      for (Idx x = 0; x < ri.ring->order() && ok; ++x) {
        for (Idx y = 0; y < ri.ring->order(); ++y) val[y] = ri.ring->mul(x, y);
        int idx = E.index_of(val);
        ok = ok && idx >= 0;
        to_end[x] = idx;
      }
      for (Idx x = 0; x < ri.ring->order() && ok; ++x)
        for (Idx y = 0; y < ri.ring->order() && ok; ++y) {
          ok = ok && to_end[ri.ring->add(x, y)] ==
                         E.ring.add(to_end[x], to_end[y]);
          ok = ok && to_end[ri.ring->mul(x, y)] ==
                         E.ring.mul(to_end[x], to_end[y]);
        }
    }
    h.criterion(9, "module suite: C2=>C3, essential-mono splits, almost "
                   "clean End, End(R)=R",
                ok, seconds_since(t0), 120.0);
  }

  // 10. The three unit-regularity characterizations agree elementwise and
  //     regular elements are exactly the units, on every catalog ring.
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (const RingInstance& ri : cat.rings) {
      ElementClassification cls = classify_elements(*ri.ring);
      try {
        unit_regular_flag(*ri.ring, cls);  // throws on route disagreement
      } catch (const Error&) {
        ok = false;
      }
      for (Idx x = 0; x < ri.ring->order(); ++x)
        ok = ok && cls.regular[x] == cls.unit[x];
    }
    ok = ok && claim_clean("INV-FIN-REG", cat, budgets);
    h.criterion(10, "unit-regularity routes agree; regular elements = units",
                ok, seconds_since(t0), 0);
  }

  if (h.failures) {
    std::printf("%d criterion(s) FAILED\n", h.failures);
    return 1;
  }
  std::puts("all criteria passed");
  return 0;
}
