#include "ringlab/decomp.hpp"

#include <map>

namespace ringlab {

std::optional<DecompKind> decomp_kind_from_name(const std::string& name) {
  static const std::map<std::string, DecompKind> kinds = {
      {"clean", {CleanFamily::Clean, false}},
      {"almost_clean", {CleanFamily::AlmostClean, false}},
      {"special_clean", {CleanFamily::SpecialClean, false}},
      {"special_almost_clean", {CleanFamily::SpecialAlmostClean, false}},
      {"star_clean", {CleanFamily::Clean, true}},
      {"almost_star_clean", {CleanFamily::AlmostClean, true}},
      {"special_star_clean", {CleanFamily::SpecialClean, true}},
      {"special_almost_star_clean", {CleanFamily::SpecialAlmostClean, true}},
  };
  auto it = kinds.find(name);
  if (it == kinds.end()) return std::nullopt;
  return it->second;
}

std::string decomp_kind_name(DecompKind kind) {
  std::string base;
  switch (kind.family) {
    case CleanFamily::Clean:
      base = kind.star ? "star_clean" : "clean";
      break;
    case CleanFamily::AlmostClean:
      base = kind.star ? "almost_star_clean" : "almost_clean";
      break;
    case CleanFamily::SpecialClean:
      base = kind.star ? "special_star_clean" : "special_clean";
      break;
    case CleanFamily::SpecialAlmostClean:
      base = kind.star ? "special_almost_star_clean" : "special_almost_clean";
      break;
  }
  return base;
}

namespace {

bool kind_wants_unit(CleanFamily f) {
  return f == CleanFamily::Clean || f == CleanFamily::SpecialClean;
}

bool kind_wants_special(CleanFamily f) {
  return f == CleanFamily::SpecialClean || f == CleanFamily::SpecialAlmostClean;
}

}  // namespace

std::vector<Decomposition> decompositions(const FinRing& R,
                                          const ElementClassification& cls,
                                          Idx a, DecompKind kind) {
  if (a < 0 || a >= R.order())
    fail(Errc::InvalidArgument, "element index out of range");
  if (kind.star && !R.has_star())
    fail(Errc::InvalidArgument,
         "star decomposition kind requested on a ring without involution");

  const auto& es = kind.star ? cls.projection_list : cls.idempotent_list;
  ElemSet aR = R.principal_right_ideal(a);
  std::vector<Decomposition> out;
  for (Idx e : es) {
    Idx u = R.sub(a, e);
    bool ok = kind_wants_unit(kind.family) ? cls.unit[u] : cls.regular[u];
    if (!ok) continue;
    bool special = !aR.meets_outside(R.principal_right_ideal(e), R.zero());
    if (kind_wants_special(kind.family) && !special) continue;
    Decomposition d;
    d.a = a;
    d.e = e;
    d.u = u;
    d.u_is_unit = cls.unit[u];
    d.u_is_regular = cls.regular[u];
    d.special = special;
    d.e_is_projection = cls.has_star && cls.projection[e];
    out.push_back(d);
  }
  return out;
}

std::vector<Decomposition> decompositions(const FinRing& R, Idx a,
                                          DecompKind kind) {
  return decompositions(R, classify_elements(R), a, kind);
}

CleannessReport classify_cleanness(const FinRing& R,
                                   const ElementClassification& cls) {
  const int n = R.order();
  CleannessReport rep;
  rep.has_star = R.has_star();

  // Cache eR for the candidates; aR is rebuilt once per element.
  std::vector<ElemSet> idem_ideals(cls.idempotent_list.size());
  for (size_t i = 0; i < cls.idempotent_list.size(); ++i)
    idem_ideals[i] = R.principal_right_ideal(cls.idempotent_list[i]);

  struct Counts {
    bool clean = false, almost = false, special_clean = false,
         special_almost = false;
    int special_clean_count = 0, special_almost_count = 0;
  };
  auto count_for = [&](Idx a, const std::vector<Idx>& es,
                       const std::vector<ElemSet>& ideals) {
    Counts c;
    ElemSet aR = R.principal_right_ideal(a);
    for (size_t i = 0; i < es.size(); ++i) {
      Idx u = R.sub(a, es[i]);
      bool unit = cls.unit[u], regular = cls.regular[u];
      if (!regular) continue;  // units are regular
      bool special = !aR.meets_outside(ideals[i], R.zero());
      c.almost = true;
      c.clean |= unit;
      if (special) {
        c.special_almost = true;
        ++c.special_almost_count;
        if (unit) {
          c.special_clean = true;
          ++c.special_clean_count;
        }
      }
    }
    return c;
  };

  auto apply = [&](FlagW& flag, bool ok, Idx a) {
    if (!ok && flag.value) {
      flag.value = false;
      flag.counterexample = a;
    }
  };

  auto init = [](FlagW& f) { f.value = true; };
  init(rep.clean);
  init(rep.almost_clean);
  init(rep.special_clean);
  init(rep.special_almost_clean);
  init(rep.uniquely_special_clean);
  init(rep.uniquely_special_almost_clean);
  if (rep.has_star) {
    init(rep.star_clean);
    init(rep.almost_star_clean);
    init(rep.special_star_clean);
    init(rep.special_almost_star_clean);
    init(rep.uniquely_special_star_clean);
    init(rep.uniquely_special_almost_star_clean);
  }

  std::vector<ElemSet> proj_ideals;
  if (rep.has_star) {
    proj_ideals.resize(cls.projection_list.size());
    for (size_t i = 0; i < cls.projection_list.size(); ++i)
      proj_ideals[i] = R.principal_right_ideal(cls.projection_list[i]);
  }

  for (Idx a = 0; a < n; ++a) {
    Counts c = count_for(a, cls.idempotent_list, idem_ideals);
    apply(rep.clean, c.clean, a);
    apply(rep.almost_clean, c.almost, a);
    apply(rep.special_clean, c.special_clean, a);
    apply(rep.special_almost_clean, c.special_almost, a);
    apply(rep.uniquely_special_clean, c.special_clean_count == 1, a);
    apply(rep.uniquely_special_almost_clean, c.special_almost_count == 1, a);
    if (rep.has_star) {
      Counts s = count_for(a, cls.projection_list, proj_ideals);
      apply(rep.star_clean, s.clean, a);
      apply(rep.almost_star_clean, s.almost, a);
      apply(rep.special_star_clean, s.special_clean, a);
      apply(rep.special_almost_star_clean, s.special_almost, a);
      apply(rep.uniquely_special_star_clean, s.special_clean_count == 1, a);
      apply(rep.uniquely_special_almost_star_clean,
            s.special_almost_count == 1, a);
    }
  }
  return rep;
}

CleannessReport classify_cleanness(const FinRing& R) {
  return classify_cleanness(R, classify_elements(R));
}

Decomposition rickart_witness(const FinRing& R,
                              const ElementClassification& cls, Idx a) {
  if (a < 0 || a >= R.order())
    fail(Errc::InvalidArgument, "element index out of range");
  AbelianCheck ab = is_abelian(R);
  if (!ab.abelian)
    fail(Errc::NotAbelian,
         R.label() + ": idempotent " + std::to_string(ab.witness->first) +
             " does not commute with " + std::to_string(ab.witness->second));

  ElemSet ann = R.right_annihilator(a);
  Idx found = -1;
  for (Idx e : cls.idempotent_list)
    if (R.principal_right_ideal(e) == ann) {
      found = e;
      break;
    }
  if (found < 0)
    fail(Errc::NotRickartAt,
         R.label() + ": ann_r(" + std::to_string(a) +
             ") is not generated by an idempotent");

  Decomposition d;
  d.a = a;
  d.e = found;
  d.u = R.sub(a, found);
  d.u_is_unit = cls.unit[d.u];
  d.u_is_regular = cls.regular[d.u];
  d.special = !R.principal_right_ideal(a).meets_outside(
      R.principal_right_ideal(d.e), R.zero());
  d.e_is_projection = cls.has_star && cls.projection[d.e];
  if (!d.u_is_regular || !d.special)
    fail(Errc::InternalCheck,
         R.label() + ": annihilator witness at " + std::to_string(a) +
             " is not a special almost clean decomposition");
  return d;
}

Decomposition rickart_witness(const FinRing& R, Idx a) {
  return rickart_witness(R, classify_elements(R), a);
}

}  // namespace ringlab
