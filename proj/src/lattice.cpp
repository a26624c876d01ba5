#include "ringlab/lattice.hpp"

#include <algorithm>

namespace ringlab {

IdealLattice right_ideals(std::shared_ptr<const FinRing> R, long max_ideals) {
  IdealLattice L{regular_module(std::move(R)), {}, {}, true};
  L.lattice = all_submodules(L.rr, max_ideals);
  L.principal = principal_submodules(L.rr);
  return L;
}

SummandInfo ring_summands(const FinRing& R, const ElementClassification& cls,
                          const IdealLattice& L) {
  SummandInfo info;
  for (Idx e : cls.idempotent_list) {
    int idx = L.lattice.index_of(L.principal[e]);
    if (idx < 0)
      fail(Errc::InternalCheck,
           R.label() + ": principal ideal of idempotent " + std::to_string(e) +
               " missing from lattice");
    auto& gens = info.generating_idempotents[idx];
    if (gens.empty()) info.indices.push_back(idx);
    gens.push_back(e);
  }
  std::sort(info.indices.begin(), info.indices.end());
  return info;
}

FlagW vn_regular_flag(const FinRing& R) {
  FlagW f{true, std::nullopt};
  for (Idx a = 0; a < R.order(); ++a) {
    bool ok = false;
    for (Idx x = 0; x < R.order() && !ok; ++x)
      ok = R.mul(R.mul(a, x), a) == a;
    if (!ok) {
      f.value = false;
      f.counterexample = a;
      return f;
    }
  }
  return f;
}

FlagW unit_regular_flag(const FinRing& R, const ElementClassification& cls) {
  FlagW f{true, std::nullopt};
  for (Idx a = 0; a < R.order(); ++a) {
    // a = e*v with v a unit iff a*v^{-1} is idempotent, and symmetrically;
    // sweeping w over the units covers every candidate on each route.
    bool via_aua = false, via_ev = false, via_ve = false;
    for (Idx w : cls.unit_list) {
      via_aua |= R.mul(R.mul(a, w), a) == a;
      Idx aw = R.mul(a, w);
      via_ev |= R.mul(aw, aw) == aw;
      Idx wa = R.mul(w, a);
      via_ve |= R.mul(wa, wa) == wa;
      if (via_aua && via_ev && via_ve) break;
    }
    if (via_aua != via_ev || via_aua != via_ve)
      fail(Errc::InternalCheck,
           R.label() + ": unit-regularity characterizations disagree at " +
               std::to_string(a) + " (aua=" + std::to_string(via_aua) +
               " ev=" + std::to_string(via_ev) +
               " ve=" + std::to_string(via_ve) + ")");
    if (!via_aua) {
      f.value = false;
      f.counterexample = a;
      return f;
    }
  }
  return f;
}

namespace {

FlagW annihilator_generated_flag(const FinRing& R, const std::vector<Idx>& es,
                                 bool left) {
  std::vector<ElemSet> gen_ideals;
  gen_ideals.reserve(es.size());
  for (Idx e : es)
    gen_ideals.push_back(left ? R.principal_left_ideal(e)
                              : R.principal_right_ideal(e));
  FlagW f{true, std::nullopt};
  for (Idx a = 0; a < R.order(); ++a) {
    ElemSet ann = left ? R.left_annihilator(a) : R.right_annihilator(a);
    bool ok = false;
    for (size_t i = 0; i < es.size() && !ok; ++i) ok = gen_ideals[i] == ann;
    if (!ok) {
      f.value = false;
      f.counterexample = a;
      return f;
    }
  }
  return f;
}

}  // namespace

FlagW rickart_right_flag(const FinRing& R, const ElementClassification& cls) {
  return annihilator_generated_flag(R, cls.idempotent_list, /*left=*/false);
}

FlagW rickart_left_flag(const FinRing& R, const ElementClassification& cls) {
  return annihilator_generated_flag(R, cls.idempotent_list, /*left=*/true);
}

FlagW rickart_star_flag(const FinRing& R, const ElementClassification& cls) {
  if (!R.has_star())
    fail(Errc::InvalidArgument,
         R.label() + ": rickart_star requires an involution");
  return annihilator_generated_flag(R, cls.projection_list, /*left=*/false);
}

FlagW reduced_flag(const FinRing& R) {
  FlagW f{true, std::nullopt};
  for (Idx a = 0; a < R.order(); ++a)
    if (a != R.zero() && R.mul(a, a) == R.zero()) {
      f.value = false;
      f.counterexample = a;
      return f;
    }
  return f;
}

FlagW star_regular_flag(const FinRing& R, const ElementClassification& cls) {
  if (!R.has_star())
    fail(Errc::InvalidArgument,
         R.label() + ": star_regular requires an involution");
  FlagW vn = vn_regular_flag(R);
  if (!vn.value) return vn;
  (void)cls;
  FlagW f{true, std::nullopt};
  for (Idx a = 0; a < R.order(); ++a)
    if (a != R.zero() && R.mul(R.star(a), a) == R.zero()) {
      f.value = false;
      f.counterexample = a;
      return f;
    }
  return f;
}

ElemSet singular_right_ideal(const FinRing& R) {
  // Z(R_R) through the module machinery; the submodule assertion is there.
  auto shared = std::make_shared<FinRing>(R);
  return singular_submodule(regular_module(shared));
}

ElemSet singular_left_ideal(const FinRing& R) {
  auto op = std::make_shared<FinRing>(R.opposite());
  return singular_submodule(regular_module(op));
}

FlagW morphic_right_flag(std::shared_ptr<const FinRing> R, const Budgets& b) {
  FinModule RR = regular_module(R);
  FlagW f{true, std::nullopt};
  for (Idx x = 0; x < R->order(); ++x) {
    ElemSet xR = R->principal_right_ideal(x);
    FinModule quot = quotient_module(
        R, xR, R->label() + "/(" + std::to_string(x) + ")R");
    FinModule ann = submodule_as_module(
        RR, R->right_annihilator(x),
        "ann_r(" + std::to_string(x) + ") in " + R->label());
    if (!modules_isomorphic(ann, quot, b)) {
      f.value = false;
      f.counterexample = x;
      return f;
    }
  }
  return f;
}

FlagW morphic_left_flag(std::shared_ptr<const FinRing> R, const Budgets& b) {
  auto op = std::make_shared<FinRing>(R->opposite());
  return morphic_right_flag(op, b);
}

RingClassReport ring_class(std::shared_ptr<const FinRing> R,
                           const Budgets& b) {
  RingClassReport rep;
  rep.has_star = R->has_star();
  ElementClassification cls = classify_elements(*R);

  rep.vn_regular = vn_regular_flag(*R);
  rep.unit_regular = unit_regular_flag(*R, cls);
  rep.rickart_right = rickart_right_flag(*R, cls);
  rep.rickart_left = rickart_left_flag(*R, cls);
  rep.reduced = reduced_flag(*R);
  if (rep.has_star) {
    rep.star_regular = star_regular_flag(*R, cls);
    rep.rickart_star = rickart_star_flag(*R, cls);
  }

  ElemSet zr = singular_right_ideal(*R);
  rep.singular_right = zr.elements();
  rep.right_nonsingular.value = zr.only(R->zero());
  if (!rep.right_nonsingular.value)
    rep.right_nonsingular.counterexample = [&] {
      for (Idx x : rep.singular_right)
        if (x != R->zero()) return x;
      return R->zero();
    }();
  ElemSet zl = singular_left_ideal(*R);
  rep.singular_left = zl.elements();
  rep.left_nonsingular.value = zl.only(R->zero());
  if (!rep.left_nonsingular.value)
    rep.left_nonsingular.counterexample = [&] {
      for (Idx x : rep.singular_left)
        if (x != R->zero()) return x;
      return R->zero();
    }();

  IdealLattice L = right_ideals(R, b.max_ideals);
  rep.ideal_count = L.count();
  SummandInfo sums = ring_summands(*R, cls, L);
  rep.summand_count = static_cast<int>(sums.indices.size());
  rep.cs.c1 = cs_c1(L.rr, L.lattice, L.principal, sums.indices,
                    &rep.cs.c1_witness);
  rep.cs.c2 = cs_c2(L.rr, L.lattice, sums.indices, b, &rep.cs.c2_witness);
  rep.cs.c3 = cs_c3(L.rr, L.lattice, sums.indices, &rep.cs.c3_witness);
  rep.quasi_continuous = rep.cs.c1 && rep.cs.c3;
  rep.continuous = rep.cs.c1 && rep.cs.c2;

  rep.morphic_right = morphic_right_flag(R, b);
  rep.morphic_left = morphic_left_flag(R, b);
  return rep;
}

}  // namespace ringlab
