#ifndef RINGLAB_MODULE_HPP_
#define RINGLAB_MODULE_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/budgets.hpp"
#include "ringlab/decomp.hpp"
#include "ringlab/finring.hpp"
#include "ringlab/ringspec.hpp"

namespace ringlab {

// A finite right module over a FinRing, given by an addition table and an
// action table. Immutable once built.
class FinModule {
 public:
  // Checks the abelian-group and unital action axioms by full scan.
  static FinModule validate(std::shared_ptr<const FinRing> R, int order,
                            std::vector<Idx> add, std::vector<Idx> action,
                            std::string label);

  const FinRing& ring() const { return *ring_; }
  const std::shared_ptr<const FinRing>& ring_ptr() const { return ring_; }
  int order() const { return m_; }
  const std::string& label() const { return label_; }

  Idx add(Idx x, Idx y) const { return add_[static_cast<size_t>(x) * m_ + y]; }
  Idx neg(Idx x) const { return neg_[x]; }
  Idx sub(Idx x, Idx y) const { return add(x, neg_[y]); }
  Idx act(Idx x, Idx r) const {
    return act_[static_cast<size_t>(x) * ring_->order() + r];
  }
  Idx zero() const { return zero_; }

  int additive_order(Idx x) const;

  // {x*r : r in R} as a bitset over the module carrier.
  ElemSet principal_submodule(Idx x) const;
  // {r in R : x*r = 0} as a bitset over the ring carrier.
  ElemSet annihilator(Idx x) const;

 private:
  friend FinModule regular_module(std::shared_ptr<const FinRing> R);
  friend FinModule submodule_as_module(const FinModule& M, const ElemSet& S,
                                       std::string label);
  FinModule() = default;

  std::shared_ptr<const FinRing> ring_;
  int m_ = 0;
  std::vector<Idx> add_, neg_, act_;
  Idx zero_ = 0;
  std::string label_;
};

// R as a right module over itself. Tables are shared with the ring, so no
// re-validation happens.
FinModule regular_module(std::shared_ptr<const FinRing> R);
FinModule free_module(std::shared_ptr<const FinRing> R, long rank,
                      const Budgets& b);
// R/I for a right ideal I, via coset tables. Cosets are ordered by their
// least representative.
FinModule quotient_module(std::shared_ptr<const FinRing> R, const ElemSet& I,
                          std::string label);
FinModule direct_sum(const FinModule& A, const FinModule& B, const Budgets& b);
// The subset S of M (which must be a submodule) with its induced structure.
FinModule submodule_as_module(const FinModule& M, const ElemSet& S,
                              std::string label);

// Builds free(k) | cyclic(gens) | sum(...) over R; `env` resolves module
// name references.
FinModule build_module(
    std::shared_ptr<const FinRing> R, const ModuleSpec& spec, const Budgets& b,
    const std::map<std::string, std::shared_ptr<const FinModule>>* env =
        nullptr);

// ---------------------------------------------------------------------------
// Submodule lattice machinery. Right ideals of R are exactly the
// submodules of regular_module(R), so the ring-level lattice reuses all of
// this.

// I + J for submodules I, J (as sets: every coset i + J with i in I).
ElemSet submodule_sum(const FinModule& M, const ElemSet& I, const ElemSet& J);
// Smallest submodule containing the generators.
ElemSet generated_submodule(const FinModule& M, const std::vector<Idx>& gens);

struct SubmoduleLattice {
  std::vector<ElemSet> mods;  // sorted by (size, members)
  bool complete = true;
  int zero_index = 0;
  int full_index = 0;

  int index_of(const ElemSet& s) const;  // -1 when absent
};

// All submodules, via closure of the cyclic submodules under pairwise sum.
// Throws BudgetExceeded when more than max_count arise.
SubmoduleLattice all_submodules(const FinModule& M, long max_count);

std::vector<ElemSet> principal_submodules(const FinModule& M);

// I essential in J: every nonzero x in J has x*R meeting I outside 0.
// Throws NotContained if I is not a subset of J.
bool is_essential_in(const FinModule& M, const std::vector<ElemSet>& principal,
                     const ElemSet& I, const ElemSet& J);

// Lattice indices of the direct summands, found by complement search:
// N is a summand iff some N' has N & N' = 0 and N + N' = M.
std::vector<int> summand_indices(const FinModule& M,
                                 const SubmoduleLattice& L);

// Additive-order and annihilator-size profiles; equal profiles are
// necessary for a module isomorphism.
struct ModuleProfile {
  int size = 0;
  std::vector<std::pair<int, int>> add_orders;  // (order, count), sorted
  std::vector<std::pair<int, int>> ann_sizes;   // (size, count), sorted

  bool operator==(const ModuleProfile&) const = default;
};

ModuleProfile module_profile(const FinModule& M);

// Backtracking search for a bijective module homomorphism, with the
// profile prefilter applied first. Throws BudgetExceeded past the
// assignment cap.
bool modules_isomorphic(const FinModule& M, const FinModule& N,
                        const Budgets& b);

// Every homomorphism M -> N as a value table, sorted lexicographically.
std::vector<std::vector<Idx>> all_homs(const FinModule& M, const FinModule& N,
                                       const Budgets& b);

bool is_module_hom(const FinModule& M, const FinModule& N,
                   const std::vector<Idx>& val);

// ---------------------------------------------------------------------------
// Endomorphism rings

struct EndRing {
  FinRing ring;                        // addition pointwise, product (f.g)(x) = f(g(x))
  std::vector<std::vector<Idx>> homs;  // value table of element i

  // Index of a value table, -1 when it is not an endomorphism.
  int index_of(const std::vector<Idx>& val) const;
};

EndRing endomorphism_ring(const FinModule& M, const Budgets& b);

// ---------------------------------------------------------------------------
// Structure flags

struct CsFlags {
  bool c1 = false, c2 = false, c3 = false;
  std::optional<int> c1_witness;                  // lattice index
  std::optional<std::pair<int, int>> c2_witness;  // (ideal, summand)
  std::optional<std::pair<int, int>> c3_witness;  // summand pair
};

// C1 alone (cheap), and the full triple. `summand_idx` holds lattice
// indices of the direct summands of M.
bool cs_c1(const FinModule& M, const SubmoduleLattice& L,
           const std::vector<ElemSet>& principal,
           const std::vector<int>& summand_idx, std::optional<int>* witness);
bool cs_c2(const FinModule& M, const SubmoduleLattice& L,
           const std::vector<int>& summand_idx, const Budgets& b,
           std::optional<std::pair<int, int>>* witness);
bool cs_c3(const FinModule& M, const SubmoduleLattice& L,
           const std::vector<int>& summand_idx,
           std::optional<std::pair<int, int>>* witness);

struct ModuleClassReport {
  int order = 0;
  int submodule_count = 0;
  int summand_count = 0;
  int end_order = 0;
  CsFlags cs;
  bool quasi_continuous = false, continuous = false;
  bool nonsingular = false;
  std::vector<Idx> singular;  // Z(M), ascending
  bool clean = false, almost_clean = false;
};

ModuleClassReport module_class(const FinModule& M, const Budgets& b);

// The singular submodule Z(M) = {x : ann(x) essential in R}. Checked to be
// a submodule before returning.
ElemSet singular_submodule(const FinModule& M);

// ---------------------------------------------------------------------------
// Endomorphism decompositions

bool is_mono(const std::vector<Idx>& val);
bool is_essential_mono(const FinModule& M, const std::vector<ElemSet>& principal,
                       const std::vector<Idx>& val);

enum class EndoKind { Mono, EssentialMono };

struct EndoDecomposition {
  int e = 0;  // EndRing index of the idempotent
  int u = 0;  // EndRing index of f - e
  EndoKind kind = EndoKind::Mono;
};

// Searches End(M) for an idempotent e with f - e a monomorphism, preferring
// e that make f - e an essential monomorphism. Least index wins within the
// strongest kind. Throws NoDecomposition if nothing works.
EndoDecomposition endo_decompose(const FinModule& M, const EndRing& E, int f);

struct CsLevelReport {
  std::vector<bool> cs_at;  // cs_at[k-1] for k = 1..kmax
  int largest = 0;          // largest k with free(R,k) CS, 0 if none
};

CsLevelReport cs_level(std::shared_ptr<const FinRing> R, int kmax,
                       const Budgets& b);

}  // namespace ringlab

#endif  // RINGLAB_MODULE_HPP_
