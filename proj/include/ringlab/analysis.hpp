#ifndef RINGLAB_ANALYSIS_HPP_
#define RINGLAB_ANALYSIS_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/lattice.hpp"

namespace ringlab {

// Memoizing view of one ring. Each piece is computed at most once, so a
// batch of claims over the same catalog instance shares the expensive
// lattice and isomorphism work. Not thread-safe; use one per task.
class RingAnalysis {
 public:
  RingAnalysis(std::string name, std::shared_ptr<const FinRing> R, Budgets b);

  const std::string& name() const { return name_; }
  const FinRing& ring() const { return *ring_; }
  const std::shared_ptr<const FinRing>& ring_ptr() const { return ring_; }
  const Budgets& budgets() const { return budgets_; }

  const ElementClassification& elems();
  const AbelianCheck& abelian_check();
  bool abelian() { return abelian_check().abelian; }
  const CleannessReport& cleanness();
  const IdealLattice& ideals();
  const SummandInfo& summands();

  bool c1();
  bool c2();
  bool c3();
  bool cs() { return c1(); }
  bool quasi_continuous() { return c1() && c3(); }
  bool continuous() { return c1() && c2(); }
  std::optional<int> c1_witness();

  const FlagW& vn_regular();
  const FlagW& unit_regular();
  const FlagW& rickart_right();
  const FlagW& rickart_left();
  bool rickart() { return rickart_right().value && rickart_left().value; }
  const FlagW& reduced();
  const FlagW& right_nonsingular();
  const FlagW& left_nonsingular();
  const std::vector<Idx>& singular_right();
  const FlagW& morphic_right();
  const FlagW& morphic_left();
  const FlagW& star_regular();   // requires involution
  const FlagW& rickart_star();   // requires involution
  bool has_star() const { return ring_->has_star(); }

  // Flag lookup by report name ("clean", "cs", "rickart", ...). Unknown
  // names throw InvalidArgument; star flags on a ring without involution
  // evaluate to false.
  bool flag(const std::string& flag_name);
  static const std::vector<std::string>& flag_names();

 private:
  std::string name_;
  std::shared_ptr<const FinRing> ring_;
  Budgets budgets_;

  std::optional<ElementClassification> elems_;
  std::optional<AbelianCheck> abelian_;
  std::optional<CleannessReport> cleanness_;
  std::optional<IdealLattice> ideals_;
  std::optional<SummandInfo> summands_;
  std::optional<bool> c1_, c2_, c3_;
  std::optional<int> c1_witness_;
  std::optional<FlagW> vn_regular_, unit_regular_, rickart_right_,
      rickart_left_, reduced_, right_nonsingular_, left_nonsingular_,
      morphic_right_, morphic_left_, star_regular_, rickart_star_;
  std::optional<std::vector<Idx>> singular_right_;
};

// Same idea for a module instance.
class ModuleAnalysis {
 public:
  ModuleAnalysis(std::string name, std::shared_ptr<const FinModule> M,
                 Budgets b);

  const std::string& name() const { return name_; }
  const FinModule& mod() const { return *mod_; }
  const std::shared_ptr<const FinModule>& mod_ptr() const { return mod_; }

  const SubmoduleLattice& lattice();
  const std::vector<ElemSet>& principal();
  const std::vector<int>& summands();
  bool c1();
  bool c2();
  bool c3();
  bool quasi_continuous() { return c1() && c3(); }
  bool continuous() { return c1() && c2(); }
  bool nonsingular();
  const EndRing& end_ring();
  const CleannessReport& end_cleanness();

 private:
  std::string name_;
  std::shared_ptr<const FinModule> mod_;
  Budgets budgets_;

  std::optional<SubmoduleLattice> lattice_;
  std::optional<std::vector<ElemSet>> principal_;
  std::optional<std::vector<int>> summands_;
  std::optional<bool> c1_, c2_, c3_, nonsingular_;
  std::optional<EndRing> end_;
  std::optional<CleannessReport> end_cleanness_;
};

}  // namespace ringlab

#endif  // RINGLAB_ANALYSIS_HPP_
