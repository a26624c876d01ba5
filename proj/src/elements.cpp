#include "ringlab/elements.hpp"

namespace ringlab {

ElementClassification classify_elements(const FinRing& R) {
  const int n = R.order();
  ElementClassification c;
  c.order = n;
  c.has_star = R.has_star();
  c.idempotent.assign(n, false);
  c.unit.assign(n, false);
  c.left_regular.assign(n, true);
  c.right_regular.assign(n, true);
  c.regular.assign(n, false);
  c.central.assign(n, true);
  c.projection.assign(n, false);
  c.inverse.assign(n, -1);

  for (Idx a = 0; a < n; ++a) {
    c.idempotent[a] = R.mul(a, a) == a;
    for (Idx x = 0; x < n; ++x) {
      Idx ax = R.mul(a, x), xa = R.mul(x, a);
      if (ax != xa) c.central[a] = false;
      if (x != R.zero()) {
        if (ax == R.zero()) c.right_regular[a] = false;
        if (xa == R.zero()) c.left_regular[a] = false;
      }
      if (ax == R.one() && xa == R.one() && c.inverse[a] < 0) c.inverse[a] = x;
    }
    c.unit[a] = c.inverse[a] >= 0;
    c.regular[a] = c.left_regular[a] && c.right_regular[a];
    if (c.has_star) c.projection[a] = c.idempotent[a] && R.star(a) == a;
    if (c.idempotent[a]) c.idempotent_list.push_back(a);
    if (c.unit[a]) c.unit_list.push_back(a);
    if (c.projection[a]) c.projection_list.push_back(a);
  }
  return c;
}

AbelianCheck is_abelian(const FinRing& R) {
  const int n = R.order();
  AbelianCheck out;
  for (Idx e = 0; e < n; ++e) {
    if (R.mul(e, e) != e) continue;
    for (Idx x = 0; x < n; ++x)
      if (R.mul(e, x) != R.mul(x, e)) {
        out.abelian = false;
        out.witness = {e, x};
        return out;
      }
  }
  return out;
}

}  // namespace ringlab
