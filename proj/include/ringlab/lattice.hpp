#ifndef RINGLAB_LATTICE_HPP_
#define RINGLAB_LATTICE_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/module.hpp"

namespace ringlab {

// The right ideals of R, i.e. the submodules of R as a right module over
// itself, with every principal right ideal cached.
struct IdealLattice {
  FinModule rr;
  SubmoduleLattice lattice;
  std::vector<ElemSet> principal;  // xR for each x
  bool complete = true;

  int count() const { return static_cast<int>(lattice.mods.size()); }
};

IdealLattice right_ideals(std::shared_ptr<const FinRing> R, long max_ideals);

// Direct summands of R_R are exactly {eR : e idempotent}; each summand is
// annotated with every idempotent generating it.
struct SummandInfo {
  std::vector<int> indices;  // lattice indices, ascending
  std::map<int, std::vector<Idx>> generating_idempotents;
};

SummandInfo ring_summands(const FinRing& R, const ElementClassification& cls,
                          const IdealLattice& L);

// Flag calculators. Each false universal flag carries the least-index
// counterexample.
FlagW vn_regular_flag(const FinRing& R);
// Checks three characterizations per element (a = aua with u a unit,
// a = ev, a = v'e') and throws InternalCheck if they ever disagree.
FlagW unit_regular_flag(const FinRing& R, const ElementClassification& cls);
FlagW rickart_right_flag(const FinRing& R, const ElementClassification& cls);
FlagW rickart_left_flag(const FinRing& R, const ElementClassification& cls);
FlagW rickart_star_flag(const FinRing& R, const ElementClassification& cls);
FlagW reduced_flag(const FinRing& R);
// vn-regular with a proper involution (a*a = 0 only for a = 0).
FlagW star_regular_flag(const FinRing& R, const ElementClassification& cls);

// Z(R_R) = {x : ann_r(x) essential}; checked to be a right ideal.
ElemSet singular_right_ideal(const FinRing& R);
ElemSet singular_left_ideal(const FinRing& R);

// ann_r(x) isomorphic to R/xR as right modules, for every x.
FlagW morphic_right_flag(std::shared_ptr<const FinRing> R, const Budgets& b);
FlagW morphic_left_flag(std::shared_ptr<const FinRing> R, const Budgets& b);

struct RingClassReport {
  bool has_star = false;
  FlagW vn_regular, unit_regular;
  FlagW rickart_right, rickart_left;
  FlagW right_nonsingular, left_nonsingular;
  FlagW reduced, morphic_right, morphic_left;
  FlagW star_regular, rickart_star;
  CsFlags cs;
  bool quasi_continuous = false, continuous = false;
  std::vector<Idx> singular_right, singular_left;
  int ideal_count = 0, summand_count = 0;
};

// The full eager report; prefer RingAnalysis when only a few flags are
// needed.
RingClassReport ring_class(std::shared_ptr<const FinRing> R, const Budgets& b);

}  // namespace ringlab

#endif  // RINGLAB_LATTICE_HPP_
