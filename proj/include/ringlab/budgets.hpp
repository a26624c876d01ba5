#ifndef RINGLAB_BUDGETS_HPP_
#define RINGLAB_BUDGETS_HPP_

namespace ringlab {

// Hard limits that turn a runaway computation into an error instead of an
// out-of-memory kill. Exceeding any of them throws Errc::BudgetExceeded
// (Errc::SizeBudgetExceeded for max_order), never a silently wrong answer.
struct Budgets {
  long max_order = 4096;          // ring order (guards two n*n tables)
  long max_ideals = 200000;       // right-ideal / submodule count per lattice
  long max_assignments = 1000000; // backtracking nodes per hom/iso search
  long max_module_order = 1024;   // module order
};

}  // namespace ringlab

#endif  // RINGLAB_BUDGETS_HPP_
