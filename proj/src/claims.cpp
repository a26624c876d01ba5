#include "ringlab/claims.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace ringlab {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::HypothesisNotMet: return "hypothesis-not-met";
    case Verdict::Violated: return "VIOLATED";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

void ClaimReport::tally() {
  holds = hypothesis_not_met = violated = skipped = 0;
  for (const InstanceVerdict& r : rows) switch (r.verdict) {
      case Verdict::Holds: ++holds; break;
      case Verdict::HypothesisNotMet: ++hypothesis_not_met; break;
      case Verdict::Violated: ++violated; break;
      case Verdict::Skipped: ++skipped; break;
    }
}

namespace {

std::string flag_note(const char* name, const FlagW& f) {
  std::string s = std::string(name) + "=" + (f.value ? "true" : "false");
  if (f.counterexample) s += " (witness " + std::to_string(*f.counterexample) + ")";
  return s;
}

Verdict check(bool ok, std::string note, std::string& witness) {
  if (ok) return Verdict::Holds;
  witness = std::move(note);
  return Verdict::Violated;
}

// --- ring claim bodies ------------------------------------------------------

Verdict eval_t_ck(RingAnalysis& A, std::string& w) {
  const FlagW& ur = A.unit_regular();
  const FlagW& sc = A.cleanness().special_clean;
  return check(ur.value == sc.value,
               flag_note("unit_regular", ur) + ", " +
                   flag_note("special_clean", sc),
               w);
}

Verdict eval_t31_fwd(RingAnalysis& A, std::string& w) {
  if (!A.abelian()) return Verdict::HypothesisNotMet;
  bool rr = A.rickart_right().value, rl = A.rickart_left().value;
  if (rr != rl) {
    w = "abelian ring Rickart on one side only";
    return Verdict::Violated;
  }
  if (!rr) return Verdict::HypothesisNotMet;
  if (!A.cleanness().special_almost_clean.value) {
    w = flag_note("special_almost_clean", A.cleanness().special_almost_clean);
    return Verdict::Violated;
  }
  // The constructive route: ann_r(a) = eR gives a = e + (a - e) with a - e
  // regular and aR meeting eR trivially. Re-verify it for every element.
  const FinRing& R = A.ring();
  const ElementClassification& cls = A.elems();
  for (Idx a = 0; a < R.order(); ++a) {
    try {
      Decomposition d = rickart_witness(R, cls, a);
      if (R.add(d.e, d.u) != a || R.mul(d.e, d.e) != d.e ||
          !d.u_is_regular || !d.special) {
        w = "annihilator witness fails re-verification at a=" +
            std::to_string(a);
        return Verdict::Violated;
      }
    } catch (const Error& e) {
      w = "no annihilator witness at a=" + std::to_string(a) + ": " + e.what();
      return Verdict::Violated;
    }
  }
  return Verdict::Holds;
}

Verdict eval_t31_bwd(RingAnalysis& A, std::string& w) {
  if (!A.abelian() || !A.cleanness().special_almost_clean.value)
    return Verdict::HypothesisNotMet;
  return check(A.rickart_right().value && A.rickart_left().value,
               flag_note("rickart_right", A.rickart_right()) + ", " +
                   flag_note("rickart_left", A.rickart_left()),
               w);
}

Verdict eval_p22(RingAnalysis& A, std::string& w) {
  if (!(A.quasi_continuous() && A.right_nonsingular().value))
    return Verdict::HypothesisNotMet;
  return check(A.cleanness().almost_clean.value,
               flag_note("almost_clean", A.cleanness().almost_clean), w);
}

Verdict eval_t26(RingAnalysis& A, std::string& w) {
  if (!(A.cs() && A.right_nonsingular().value))
    return Verdict::HypothesisNotMet;
  if (!A.cleanness().almost_clean.value) {
    w = flag_note("almost_clean", A.cleanness().almost_clean);
    return Verdict::Violated;
  }
  // Witness extraction through the endomorphism ring of R as a module over
  // itself: decompose each left multiplication and pull the decomposition
  // back to ring elements.
  const FinRing& R = A.ring();
  FinModule RR = regular_module(A.ring_ptr());
  EndRing E = endomorphism_ring(RR, A.budgets());
  const ElementClassification& cls = A.elems();
  std::vector<Idx> val(R.order());
  for (Idx a = 0; a < R.order(); ++a) {
    for (Idx x = 0; x < R.order(); ++x) val[x] = R.mul(a, x);
    int f = E.index_of(val);
    if (f < 0)
      fail(Errc::InternalCheck,
           R.label() + ": left multiplication missing from End");
    Idx e_elem, u_elem;
    try {
      EndoDecomposition d = endo_decompose(RR, E, f);
      e_elem = E.homs[d.e][R.one()];
      u_elem = R.sub(a, e_elem);
    } catch (const Error& e) {
      if (e.code() != Errc::NoDecomposition) throw;
      w = "no idempotent+mono split for left multiplication by " +
          std::to_string(a);
      return Verdict::Violated;
    }
    if (R.mul(e_elem, e_elem) != e_elem || !cls.regular[u_elem]) {
      w = "extracted decomposition at a=" + std::to_string(a) +
          " is not idempotent + regular";
      return Verdict::Violated;
    }
  }
  return Verdict::Holds;
}

Verdict eval_c33(RingAnalysis& A, std::string& w) {
  if (!(A.abelian() && A.quasi_continuous())) return Verdict::HypothesisNotMet;
  return check(A.right_nonsingular().value == A.rickart(),
               flag_note("right_nonsingular", A.right_nonsingular()) +
                   ", rickart=" + (A.rickart() ? "true" : "false"),
               w);
}

Verdict eval_c34(RingAnalysis& A, std::string& w) {
  if (!(A.quasi_continuous() && A.right_nonsingular().value))
    return Verdict::HypothesisNotMet;
  return check(A.rickart_right().value && A.rickart_left().value,
               flag_note("rickart_right", A.rickart_right()) + ", " +
                   flag_note("rickart_left", A.rickart_left()),
               w);
}

Verdict eval_p41(RingAnalysis& A, std::string& w) {
  if (!A.abelian()) return Verdict::HypothesisNotMet;
  const FlagW& ur = A.unit_regular();
  const FlagW& uc = A.cleanness().uniquely_special_clean;
  return check(ur.value == uc.value,
               flag_note("unit_regular", ur) + ", " +
                   flag_note("uniquely_special_clean", uc),
               w);
}

Verdict eval_c42(RingAnalysis& A, std::string& w) {
  if (!(A.abelian() && A.right_nonsingular().value && A.quasi_continuous()))
    return Verdict::HypothesisNotMet;
  return check(A.cleanness().uniquely_special_almost_clean.value,
               flag_note("uniquely_special_almost_clean",
                         A.cleanness().uniquely_special_almost_clean),
               w);
}

Verdict eval_c43(RingAnalysis& A, std::string& w) {
  if (!(A.abelian() && A.quasi_continuous())) return Verdict::HypothesisNotMet;
  return check(
      A.rickart() == A.cleanness().uniquely_special_almost_clean.value,
      std::string("rickart=") + (A.rickart() ? "true" : "false") + ", " +
          flag_note("uniquely_special_almost_clean",
                    A.cleanness().uniquely_special_almost_clean),
      w);
}

Verdict eval_p44(RingAnalysis& A, std::string& w) {
  if (!(A.abelian() && A.quasi_continuous() && A.right_nonsingular().value))
    return Verdict::HypothesisNotMet;
  bool vals[] = {A.continuous(),
                 A.vn_regular().value,
                 A.unit_regular().value,
                 A.cleanness().uniquely_special_clean.value,
                 A.morphic_right().value,
                 A.morphic_left().value};
  for (bool v : vals)
    if (v != vals[0]) {
      std::ostringstream os;
      os << "continuous=" << vals[0] << " vn_regular=" << vals[1]
         << " unit_regular=" << vals[2] << " uniquely_special_clean="
         << vals[3] << " morphic_right=" << vals[4] << " morphic_left="
         << vals[5];
      w = os.str();
      return Verdict::Violated;
    }
  return Verdict::Holds;
}

Verdict eval_t62(RingAnalysis& A, std::string& w) {
  if (!A.abelian()) return Verdict::HypothesisNotMet;
  const FlagW& rs = A.rickart_star();
  const FlagW& sasc = A.cleanness().special_almost_star_clean;
  if (rs.value != sasc.value) {
    w = flag_note("rickart_star", rs) + ", " +
        flag_note("special_almost_star_clean", sasc);
    return Verdict::Violated;
  }
  if (rs.value) {
    // An abelian Rickart star ring has every idempotent self-adjoint.
    const ElementClassification& cls = A.elems();
    if (cls.idempotent_list != cls.projection_list) {
      w = "idempotent that is not a projection in an abelian Rickart star "
          "ring";
      return Verdict::Violated;
    }
  }
  return Verdict::Holds;
}

Verdict eval_t63(RingAnalysis& A, std::string& w) {
  if (!A.abelian()) return Verdict::HypothesisNotMet;
  const FlagW& sr = A.star_regular();
  const FlagW& ssc = A.cleanness().special_star_clean;
  return check(sr.value == ssc.value,
               flag_note("star_regular", sr) + ", " +
                   flag_note("special_star_clean", ssc),
               w);
}

Verdict eval_c64(RingAnalysis& A, std::string& w) {
  if (!A.abelian()) return Verdict::HypothesisNotMet;
  if (A.star_regular().value &&
      !A.cleanness().uniquely_special_star_clean.value) {
    w = flag_note("uniquely_special_star_clean",
                  A.cleanness().uniquely_special_star_clean);
    return Verdict::Violated;
  }
  if (A.rickart_star().value &&
      !A.cleanness().uniquely_special_almost_star_clean.value) {
    w = flag_note("uniquely_special_almost_star_clean",
                  A.cleanness().uniquely_special_almost_star_clean);
    return Verdict::Violated;
  }
  return Verdict::Holds;
}

Verdict eval_inv_c2c3_ring(RingAnalysis& A, std::string& w) {
  if (!A.c2()) return Verdict::HypothesisNotMet;
  return check(A.c3(), "C2 holds but C3 fails", w);
}

Verdict eval_inv_reg_cs(RingAnalysis& A, std::string& w) {
  if (!A.vn_regular().value) return Verdict::HypothesisNotMet;
  if (!A.c1()) return Verdict::Holds;  // all three classes fail together
  return check(A.c2() && A.c3(),
               std::string("CS holds but c2=") + (A.c2() ? "1" : "0") +
                   " c3=" + (A.c3() ? "1" : "0"),
               w);
}

Verdict eval_inv_fin_reg(RingAnalysis& A, std::string& w) {
  const FinRing& R = A.ring();
  const ElementClassification& cls = A.elems();
  for (Idx a = 0; a < R.order(); ++a)
    if (cls.regular[a] != cls.unit[a]) {
      w = "element " + std::to_string(a) + " regular=" +
          (cls.regular[a] ? "1" : "0") + " unit=" + (cls.unit[a] ? "1" : "0");
      return Verdict::Violated;
    }
  A.unit_regular();  // runs the three-characterization cross-check
  const CleannessReport& c = A.cleanness();
  auto same = [&](const char* what, const FlagW& x, const FlagW& y) {
    if (x.value == y.value) return true;
    w = std::string(what) + " differ: " + flag_note("clean-side", x) + ", " +
        flag_note("almost-side", y);
    return false;
  };
  if (!same("clean/almost_clean", c.clean, c.almost_clean))
    return Verdict::Violated;
  if (!same("special pair", c.special_clean, c.special_almost_clean))
    return Verdict::Violated;
  if (!same("uniquely special pair", c.uniquely_special_clean,
            c.uniquely_special_almost_clean))
    return Verdict::Violated;
  if (R.has_star()) {
    if (!same("star pair", c.star_clean, c.almost_star_clean))
      return Verdict::Violated;
    if (!same("special star pair", c.special_star_clean,
              c.special_almost_star_clean))
      return Verdict::Violated;
    if (!same("uniquely special star pair", c.uniquely_special_star_clean,
              c.uniquely_special_almost_star_clean))
      return Verdict::Violated;
  }
  return Verdict::Holds;
}

// --- module claim bodies ----------------------------------------------------

Verdict eval_p13(ModuleAnalysis& A, std::string& w) {
  if (!A.c1()) return Verdict::HypothesisNotMet;
  const EndRing& E = A.end_ring();
  for (int f = 0; f < E.ring.order(); ++f) {
    try {
      endo_decompose(A.mod(), E, f);
    } catch (const Error& e) {
      if (e.code() != Errc::NoDecomposition) throw;
      w = "endomorphism " + std::to_string(f) +
          " has no idempotent+mono split";
      return Verdict::Violated;
    }
  }
  return Verdict::Holds;
}

Verdict eval_p24(ModuleAnalysis& A, std::string& w) {
  if (!A.quasi_continuous()) return Verdict::HypothesisNotMet;
  const EndRing& E = A.end_ring();
  for (int f = 0; f < E.ring.order(); ++f) {
    try {
      EndoDecomposition d = endo_decompose(A.mod(), E, f);
      if (d.kind != EndoKind::EssentialMono) {
        w = "endomorphism " + std::to_string(f) +
            " splits only as idempotent + non-essential mono";
        return Verdict::Violated;
      }
    } catch (const Error& e) {
      if (e.code() != Errc::NoDecomposition) throw;
      w = "endomorphism " + std::to_string(f) + " has no split at all";
      return Verdict::Violated;
    }
  }
  return Verdict::Holds;
}

Verdict eval_t25(ModuleAnalysis& A, std::string& w) {
  if (!(A.quasi_continuous() && A.nonsingular()))
    return Verdict::HypothesisNotMet;
  return check(A.end_cleanness().almost_clean.value,
               flag_note("End almost_clean", A.end_cleanness().almost_clean),
               w);
}

Verdict eval_inv_c2c3_module(ModuleAnalysis& A, std::string& w) {
  if (!A.c2()) return Verdict::HypothesisNotMet;
  return check(A.c3(), "C2 holds but C3 fails", w);
}

// --- pair claim bodies ------------------------------------------------------

bool same_image_set(const std::vector<Idx>& r_list,
                    const std::vector<Idx>& q_list,
                    const std::vector<Idx>& inj) {
  std::set<Idx> image;
  for (Idx e : r_list) image.insert(inj[e]);
  return image == std::set<Idx>(q_list.begin(), q_list.end());
}

Verdict eval_p21(PairAnalysis& P, std::string& w) {
  RingAnalysis& RA = *P.r;
  RingAnalysis& QA = *P.q;
  if (!same_image_set(RA.elems().idempotent_list, QA.elems().idempotent_list,
                      P.pair->inj))
    return Verdict::HypothesisNotMet;
  if (!QA.cleanness().clean.value) return Verdict::HypothesisNotMet;
  if (!RA.cleanness().almost_clean.value) {
    w = flag_note("almost_clean", RA.cleanness().almost_clean);
    return Verdict::Violated;
  }
  if (RA.vn_regular().value && !RA.cleanness().clean.value) {
    w = "vn-regular subring of a clean ring is not clean";
    return Verdict::Violated;
  }
  return Verdict::Holds;
}

Verdict eval_c23(PairAnalysis& P, std::string& w) {
  RingAnalysis& RA = *P.r;
  RingAnalysis& QA = *P.q;
  if (!same_image_set(RA.elems().idempotent_list, QA.elems().idempotent_list,
                      P.pair->inj))
    return Verdict::HypothesisNotMet;
  if (!QA.unit_regular().value) return Verdict::HypothesisNotMet;
  return check(RA.cleanness().special_almost_clean.value,
               flag_note("special_almost_clean",
                         RA.cleanness().special_almost_clean),
               w);
}

Verdict eval_p61(PairAnalysis& P, std::string& w) {
  RingAnalysis& RA = *P.r;
  RingAnalysis& QA = *P.q;
  if (!same_image_set(RA.elems().projection_list, QA.elems().projection_list,
                      P.pair->inj))
    return Verdict::HypothesisNotMet;
  if (!QA.cleanness().star_clean.value) return Verdict::HypothesisNotMet;
  if (!RA.cleanness().almost_star_clean.value) {
    w = flag_note("almost_star_clean", RA.cleanness().almost_star_clean);
    return Verdict::Violated;
  }
  if (RA.vn_regular().value && !RA.cleanness().star_clean.value) {
    w = "vn-regular star subring is not star-clean";
    return Verdict::Violated;
  }
  if (QA.cleanness().special_star_clean.value) {
    if (!RA.cleanness().special_almost_star_clean.value) {
      w = flag_note("special_almost_star_clean",
                    RA.cleanness().special_almost_star_clean);
      return Verdict::Violated;
    }
    if (RA.vn_regular().value &&
        !RA.cleanness().special_star_clean.value) {
      w = "vn-regular star subring is not special star-clean";
      return Verdict::Violated;
    }
  }
  return Verdict::Holds;
}

std::vector<Claim> make_claims() {
  std::vector<Claim> cs;
  auto ring_claim = [&](std::string id, std::string title, unsigned scope,
                        Verdict (*fn)(RingAnalysis&, std::string&)) {
    Claim c;
    c.id = std::move(id);
    c.title = std::move(title);
    c.scope = scope;
    c.ring_eval = fn;
    cs.push_back(std::move(c));
  };
  auto module_claim = [&](std::string id, std::string title,
                          Verdict (*fn)(ModuleAnalysis&, std::string&)) {
    Claim c;
    c.id = std::move(id);
    c.title = std::move(title);
    c.scope = kModules;
    c.module_eval = fn;
    cs.push_back(std::move(c));
  };
  auto pair_claim = [&](std::string id, std::string title, unsigned scope,
                        Verdict (*fn)(PairAnalysis&, std::string&)) {
    Claim c;
    c.id = std::move(id);
    c.title = std::move(title);
    c.scope = scope;
    c.pair_eval = fn;
    cs.push_back(std::move(c));
  };

  ring_claim("T-CK", "unit-regular iff special clean", kRings, eval_t_ck);
  ring_claim("T-3.1-fwd",
             "abelian Rickart rings are special almost clean, constructively",
             kRings, eval_t31_fwd);
  ring_claim("T-3.1-bwd", "abelian special almost clean rings are Rickart",
             kRings, eval_t31_bwd);
  module_claim("P-1.3",
               "CS modules: endomorphisms split as idempotent plus mono",
               eval_p13);
  pair_claim("P-2.1",
             "embedding with the same idempotents into a clean ring forces "
             "almost clean",
             kPairs | kStarPairs, eval_p21);
  ring_claim("P-2.2", "quasi-continuous nonsingular rings are almost clean",
             kRings, eval_p22);
  pair_claim("C-2.3",
             "embedding with the same idempotents into a unit-regular ring "
             "forces special almost clean",
             kPairs | kStarPairs, eval_c23);
  module_claim("P-2.4",
               "quasi-continuous modules: endomorphisms split as idempotent "
               "plus essential mono",
               eval_p24);
  module_claim("T-2.5", "quasi-continuous nonsingular modules are almost clean",
               eval_t25);
  ring_claim("T-2.6",
             "CS nonsingular rings are almost clean, with extracted witnesses",
             kRings, eval_t26);
  ring_claim("C-3.3", "abelian quasi-continuous: nonsingular iff Rickart",
             kRings, eval_c33);
  ring_claim("C-3.4",
             "quasi-continuous nonsingular rings are Rickart on both sides",
             kRings, eval_c34);
  ring_claim("P-4.1", "abelian: unit-regular iff uniquely special clean",
             kRings, eval_p41);
  ring_claim("C-4.2",
             "abelian quasi-continuous nonsingular rings are uniquely special "
             "almost clean",
             kRings, eval_c42);
  ring_claim("C-4.3",
             "abelian quasi-continuous: Rickart iff uniquely special almost "
             "clean",
             kRings, eval_c43);
  ring_claim("P-4.4",
             "abelian quasi-continuous nonsingular: continuity, regularity "
             "and morphic conditions agree",
             kRings, eval_p44);
  pair_claim("P-6.1",
             "star embedding with the same projections into a star-clean ring",
             kStarPairs, eval_p61);
  ring_claim("T-6.2",
             "abelian star rings: Rickart star iff special almost star-clean",
             kStarRings, eval_t62);
  ring_claim("T-6.3", "abelian star rings: star-regular iff special star-clean",
             kStarRings, eval_t63);
  ring_claim("C-6.4", "abelian star rings: unique special star decompositions",
             kStarRings, eval_c64);
  {
    Claim c;
    c.id = "INV-C2C3";
    c.title = "C2 implies C3";
    c.scope = kRings | kModules;
    c.ring_eval = eval_inv_c2c3_ring;
    c.module_eval = eval_inv_c2c3_module;
    cs.push_back(std::move(c));
  }
  ring_claim("INV-REG-CS",
             "vn-regular rings: CS, quasi-continuous and continuous agree",
             kRings, eval_inv_reg_cs);
  ring_claim("INV-FIN-REG",
             "finite collapse: regular elements are units and the clean "
             "families coincide",
             kRings, eval_inv_fin_reg);
  return cs;
}

}  // namespace

const std::vector<Claim>& all_claims() {
  static const std::vector<Claim> claims = make_claims();
  return claims;
}

const Claim* find_claim(const std::string& id) {
  for (const Claim& c : all_claims())
    if (c.id == id) return &c;
  return nullptr;
}

namespace {

struct WorkItem {
  enum Kind { Ring, Module, Pair } kind;
  size_t index;
};

bool claim_covers_ring(const Claim& c, const RingInstance& ri) {
  if (c.scope & kRings) return true;
  return (c.scope & kStarRings) && ri.ring->has_star();
}

bool claim_covers_pair(const Claim& c, const EmbeddingPair& p) {
  return p.star_pair ? (c.scope & kStarPairs) : (c.scope & kPairs);
}

}  // namespace

std::vector<ClaimReport> run_claims(const std::vector<const Claim*>& claims,
                                    const Catalog& cat, const Budgets& b,
                                    int jobs) {
  std::string digest = catalog_digest(cat);
  // Row slots per claim, in catalog order: rings, modules, pairs.
  std::vector<ClaimReport> reports(claims.size());
  // slot[c][kind][index] = row position or -1
  std::vector<std::array<std::vector<int>, 3>> slots(claims.size());
  for (size_t ci = 0; ci < claims.size(); ++ci) {
    reports[ci].claim = claims[ci]->id;
    reports[ci].title = claims[ci]->title;
    reports[ci].catalog_digest = digest;
    slots[ci][0].assign(cat.rings.size(), -1);
    slots[ci][1].assign(cat.modules.size(), -1);
    slots[ci][2].assign(cat.pairs.size(), -1);
    int pos = 0;
    for (size_t i = 0; i < cat.rings.size(); ++i)
      if (claims[ci]->ring_eval && claim_covers_ring(*claims[ci], cat.rings[i]))
        slots[ci][0][i] = pos++;
    for (size_t i = 0; i < cat.modules.size(); ++i)
      if (claims[ci]->module_eval && (claims[ci]->scope & kModules))
        slots[ci][1][i] = pos++;
    for (size_t i = 0; i < cat.pairs.size(); ++i)
      if (claims[ci]->pair_eval && claim_covers_pair(*claims[ci], cat.pairs[i]))
        slots[ci][2][i] = pos++;
    reports[ci].rows.resize(pos);
  }

  std::vector<WorkItem> work;
  for (size_t i = 0; i < cat.rings.size(); ++i)
    work.push_back({WorkItem::Ring, i});
  for (size_t i = 0; i < cat.modules.size(); ++i)
    work.push_back({WorkItem::Module, i});
  for (size_t i = 0; i < cat.pairs.size(); ++i)
    work.push_back({WorkItem::Pair, i});

  std::atomic<size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mu;

  auto run_item = [&](const WorkItem& item) {
    // One analysis per instance, shared by all claims that touch it.
    std::unique_ptr<RingAnalysis> ra;
    std::unique_ptr<ModuleAnalysis> ma;
    PairAnalysis pa;
    if (item.kind == WorkItem::Ring)
      ra = std::make_unique<RingAnalysis>(cat.rings[item.index].name,
                                          cat.rings[item.index].ring, b);
    else if (item.kind == WorkItem::Module)
      ma = std::make_unique<ModuleAnalysis>(cat.modules[item.index].name,
                                            cat.modules[item.index].mod, b);
    else {
      const EmbeddingPair& p = cat.pairs[item.index];
      pa.pair = &p;
      pa.r = std::make_unique<RingAnalysis>(p.name + " [inner]", p.r, b);
      pa.q = std::make_unique<RingAnalysis>(p.name + " [outer]", p.q, b);
    }
    for (size_t ci = 0; ci < claims.size(); ++ci) {
      int pos = slots[ci][item.kind][item.index];
      if (pos < 0) continue;
      InstanceVerdict row;
      auto t0 = std::chrono::steady_clock::now();
      try {
        switch (item.kind) {
          case WorkItem::Ring:
            row.instance = cat.rings[item.index].name;
            row.verdict = claims[ci]->ring_eval(*ra, row.witness);
            break;
          case WorkItem::Module:
            row.instance = cat.modules[item.index].name;
            row.verdict = claims[ci]->module_eval(*ma, row.witness);
            break;
          case WorkItem::Pair:
            row.instance = cat.pairs[item.index].name;
            row.verdict = claims[ci]->pair_eval(pa, row.witness);
            break;
        }
      } catch (const Error& e) {
        if (e.code() == Errc::BudgetExceeded ||
            e.code() == Errc::SizeBudgetExceeded) {
          row.verdict = Verdict::Skipped;
          row.witness = e.what();
        } else {
          throw;
        }
      }
      row.millis = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
      reports[ci].rows[pos] = std::move(row);
    }
  };

  int nthreads = jobs;
  if (nthreads <= 0)
    nthreads = static_cast<int>(
        std::min<unsigned>(std::thread::hardware_concurrency(), 8));
  nthreads = std::max(1, std::min<int>(nthreads, static_cast<int>(work.size())));

  if (nthreads == 1) {
    for (const WorkItem& item : work) run_item(item);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t)
      pool.emplace_back([&] {
        for (;;) {
          size_t i = next.fetch_add(1);
          if (i >= work.size()) return;
          try {
            run_item(work[i]);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mu);
            if (!first_error) first_error = std::current_exception();
            return;
          }
        }
      });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  for (ClaimReport& r : reports) r.tally();
  return reports;
}

ClaimReport run_claim(const std::string& id, const Catalog& cat,
                      const Budgets& b, int jobs) {
  const Claim* c = find_claim(id);
  if (!c) fail(Errc::InvalidArgument, "unknown claim id '" + id + "'");
  return run_claims({c}, cat, b, jobs)[0];
}

}  // namespace ringlab
