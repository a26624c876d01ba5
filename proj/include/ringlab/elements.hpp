#ifndef RINGLAB_ELEMENTS_HPP_
#define RINGLAB_ELEMENTS_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "ringlab/finring.hpp"

namespace ringlab {

// Per-element flags computed by full table scans. "Regular" means not a
// zero divisor on either side; the a = axa notion is called vn-regular
// throughout this codebase and lives in RingClassReport.
struct ElementClassification {
  int order = 0;
  bool has_star = false;
  std::vector<bool> idempotent;
  std::vector<bool> unit;
  std::vector<bool> left_regular;   // trivial left annihilator
  std::vector<bool> right_regular;  // trivial right annihilator
  std::vector<bool> regular;
  std::vector<bool> central;
  std::vector<bool> projection;  // idempotent with a* = a
  std::vector<Idx> inverse;      // -1 when not a unit

  // Ascending convenience lists.
  std::vector<Idx> idempotent_list;
  std::vector<Idx> unit_list;
  std::vector<Idx> projection_list;
};

ElementClassification classify_elements(const FinRing& R);

// True iff every idempotent is central; otherwise the least pair (e, x)
// with e idempotent and ex != xe.
struct AbelianCheck {
  bool abelian = true;
  std::optional<std::pair<Idx, Idx>> witness;
};

AbelianCheck is_abelian(const FinRing& R);

}  // namespace ringlab

#endif  // RINGLAB_ELEMENTS_HPP_
