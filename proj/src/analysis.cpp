#include "ringlab/analysis.hpp"

#include <algorithm>

namespace ringlab {

RingAnalysis::RingAnalysis(std::string name, std::shared_ptr<const FinRing> R,
                           Budgets b)
    : name_(std::move(name)), ring_(std::move(R)), budgets_(b) {}

const ElementClassification& RingAnalysis::elems() {
  if (!elems_) elems_ = classify_elements(*ring_);
  return *elems_;
}

const AbelianCheck& RingAnalysis::abelian_check() {
  if (!abelian_) abelian_ = is_abelian(*ring_);
  return *abelian_;
}

const CleannessReport& RingAnalysis::cleanness() {
  if (!cleanness_) cleanness_ = classify_cleanness(*ring_, elems());
  return *cleanness_;
}

const IdealLattice& RingAnalysis::ideals() {
  if (!ideals_) ideals_ = right_ideals(ring_, budgets_.max_ideals);
  return *ideals_;
}

const SummandInfo& RingAnalysis::summands() {
  if (!summands_) summands_ = ring_summands(*ring_, elems(), ideals());
  return *summands_;
}

bool RingAnalysis::c1() {
  if (!c1_) {
    const IdealLattice& L = ideals();
    std::optional<int> w;
    c1_ = cs_c1(L.rr, L.lattice, L.principal, summands().indices, &w);
    c1_witness_ = w;
  }
  return *c1_;
}

std::optional<int> RingAnalysis::c1_witness() {
  c1();
  return c1_witness_;
}

bool RingAnalysis::c2() {
  if (!c2_) {
    const IdealLattice& L = ideals();
    c2_ = cs_c2(L.rr, L.lattice, summands().indices, budgets_, nullptr);
  }
  return *c2_;
}

bool RingAnalysis::c3() {
  if (!c3_) {
    const IdealLattice& L = ideals();
    c3_ = cs_c3(L.rr, L.lattice, summands().indices, nullptr);
  }
  return *c3_;
}

const FlagW& RingAnalysis::vn_regular() {
  if (!vn_regular_) vn_regular_ = vn_regular_flag(*ring_);
  return *vn_regular_;
}

const FlagW& RingAnalysis::unit_regular() {
  if (!unit_regular_) unit_regular_ = unit_regular_flag(*ring_, elems());
  return *unit_regular_;
}

const FlagW& RingAnalysis::rickart_right() {
  if (!rickart_right_) rickart_right_ = rickart_right_flag(*ring_, elems());
  return *rickart_right_;
}

const FlagW& RingAnalysis::rickart_left() {
  if (!rickart_left_) rickart_left_ = rickart_left_flag(*ring_, elems());
  return *rickart_left_;
}

const FlagW& RingAnalysis::reduced() {
  if (!reduced_) reduced_ = reduced_flag(*ring_);
  return *reduced_;
}

const FlagW& RingAnalysis::right_nonsingular() {
  if (!right_nonsingular_) {
    ElemSet z = singular_right_ideal(*ring_);
    singular_right_ = z.elements();
    FlagW f{z.only(ring_->zero()), std::nullopt};
    if (!f.value)
      for (Idx x : *singular_right_)
        if (x != ring_->zero()) {
          f.counterexample = x;
          break;
        }
    right_nonsingular_ = f;
  }
  return *right_nonsingular_;
}

const std::vector<Idx>& RingAnalysis::singular_right() {
  right_nonsingular();
  return *singular_right_;
}

const FlagW& RingAnalysis::left_nonsingular() {
  if (!left_nonsingular_) {
    ElemSet z = singular_left_ideal(*ring_);
    FlagW f{z.only(ring_->zero()), std::nullopt};
    if (!f.value) {
      auto elems = z.elements();
      for (Idx x : elems)
        if (x != ring_->zero()) {
          f.counterexample = x;
          break;
        }
    }
    left_nonsingular_ = f;
  }
  return *left_nonsingular_;
}

const FlagW& RingAnalysis::morphic_right() {
  if (!morphic_right_) morphic_right_ = morphic_right_flag(ring_, budgets_);
  return *morphic_right_;
}

const FlagW& RingAnalysis::morphic_left() {
  if (!morphic_left_) morphic_left_ = morphic_left_flag(ring_, budgets_);
  return *morphic_left_;
}

const FlagW& RingAnalysis::star_regular() {
  if (!star_regular_) star_regular_ = star_regular_flag(*ring_, elems());
  return *star_regular_;
}

const FlagW& RingAnalysis::rickart_star() {
  if (!rickart_star_) rickart_star_ = rickart_star_flag(*ring_, elems());
  return *rickart_star_;
}

const std::vector<std::string>& RingAnalysis::flag_names() {
  static const std::vector<std::string> names = {
      "abelian", "reduced", "has_star",
      "clean", "almost_clean", "special_clean", "special_almost_clean",
      "uniquely_special_clean", "uniquely_special_almost_clean",
      "star_clean", "almost_star_clean", "special_star_clean",
      "special_almost_star_clean", "uniquely_special_star_clean",
      "uniquely_special_almost_star_clean",
      "vn_regular", "unit_regular",
      "rickart", "rickart_right", "rickart_left", "rickart_star",
      "star_regular",
      "nonsingular", "right_nonsingular", "left_nonsingular",
      "c1", "c2", "c3", "cs", "quasi_continuous", "continuous",
      "morphic_right", "morphic_left",
  };
  return names;
}

bool RingAnalysis::flag(const std::string& flag_name) {
  const std::string& f = flag_name;
  if (f == "abelian") return abelian();
  if (f == "reduced") return reduced().value;
  if (f == "has_star") return has_star();
  if (f == "clean") return cleanness().clean.value;
  if (f == "almost_clean") return cleanness().almost_clean.value;
  if (f == "special_clean") return cleanness().special_clean.value;
  if (f == "special_almost_clean")
    return cleanness().special_almost_clean.value;
  if (f == "uniquely_special_clean")
    return cleanness().uniquely_special_clean.value;
  if (f == "uniquely_special_almost_clean")
    return cleanness().uniquely_special_almost_clean.value;
  if (f == "star_clean") return has_star() && cleanness().star_clean.value;
  if (f == "almost_star_clean")
    return has_star() && cleanness().almost_star_clean.value;
  if (f == "special_star_clean")
    return has_star() && cleanness().special_star_clean.value;
  if (f == "special_almost_star_clean")
    return has_star() && cleanness().special_almost_star_clean.value;
  if (f == "uniquely_special_star_clean")
    return has_star() && cleanness().uniquely_special_star_clean.value;
  if (f == "uniquely_special_almost_star_clean")
    return has_star() && cleanness().uniquely_special_almost_star_clean.value;
  if (f == "vn_regular") return vn_regular().value;
  if (f == "unit_regular") return unit_regular().value;
  if (f == "rickart") return rickart();
  if (f == "rickart_right") return rickart_right().value;
  if (f == "rickart_left") return rickart_left().value;
  if (f == "rickart_star") return has_star() && rickart_star().value;
  if (f == "star_regular") return has_star() && star_regular().value;
  if (f == "nonsingular")
    return right_nonsingular().value && left_nonsingular().value;
  if (f == "right_nonsingular") return right_nonsingular().value;
  if (f == "left_nonsingular") return left_nonsingular().value;
  if (f == "c1" || f == "C1" || f == "cs" || f == "CS") return c1();
  if (f == "c2" || f == "C2") return c2();
  if (f == "c3" || f == "C3") return c3();
  if (f == "quasi_continuous") return quasi_continuous();
  if (f == "continuous") return continuous();
  if (f == "morphic_right") return morphic_right().value;
  if (f == "morphic_left") return morphic_left().value;
  fail(Errc::InvalidArgument, "unknown flag '" + f + "'");
}

ModuleAnalysis::ModuleAnalysis(std::string name,
                               std::shared_ptr<const FinModule> M, Budgets b)
    : name_(std::move(name)), mod_(std::move(M)), budgets_(b) {}

const SubmoduleLattice& ModuleAnalysis::lattice() {
  if (!lattice_) lattice_ = all_submodules(*mod_, budgets_.max_ideals);
  return *lattice_;
}

const std::vector<ElemSet>& ModuleAnalysis::principal() {
  if (!principal_) principal_ = principal_submodules(*mod_);
  return *principal_;
}

const std::vector<int>& ModuleAnalysis::summands() {
  if (!summands_) summands_ = summand_indices(*mod_, lattice());
  return *summands_;
}

bool ModuleAnalysis::c1() {
  if (!c1_) c1_ = cs_c1(*mod_, lattice(), principal(), summands(), nullptr);
  return *c1_;
}

bool ModuleAnalysis::c2() {
  if (!c2_) c2_ = cs_c2(*mod_, lattice(), summands(), budgets_, nullptr);
  return *c2_;
}

bool ModuleAnalysis::c3() {
  if (!c3_) c3_ = cs_c3(*mod_, lattice(), summands(), nullptr);
  return *c3_;
}

bool ModuleAnalysis::nonsingular() {
  if (!nonsingular_)
    nonsingular_ = singular_submodule(*mod_).only(mod_->zero());
  return *nonsingular_;
}

const EndRing& ModuleAnalysis::end_ring() {
  if (!end_) end_ = endomorphism_ring(*mod_, budgets_);
  return *end_;
}

const CleannessReport& ModuleAnalysis::end_cleanness() {
  if (!end_cleanness_) end_cleanness_ = classify_cleanness(end_ring().ring);
  return *end_cleanness_;
}

}  // namespace ringlab
