#include "ringlab/module.hpp"

#include <algorithm>
#include <unordered_map>

namespace ringlab {

namespace {

std::string idx_list(const std::vector<Idx>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

}  // namespace

FinModule FinModule::validate(std::shared_ptr<const FinRing> R, int order,
                              std::vector<Idx> add, std::vector<Idx> action,
                              std::string label) {
  const int m = order, n = R->order();
  if (m <= 0) fail(Errc::InvalidArgument, label + ": order must be positive");
  if (add.size() != static_cast<size_t>(m) * m)
    fail(Errc::InvalidArgument, label + ": add table size mismatch");
  if (action.size() != static_cast<size_t>(m) * n)
    fail(Errc::InvalidArgument, label + ": action table size mismatch");
  for (Idx v : add)
    if (v < 0 || v >= m)
      fail(Errc::InvalidArgument, label + ": add entry out of range");
  for (Idx v : action)
    if (v < 0 || v >= m)
      fail(Errc::InvalidArgument, label + ": action entry out of range");

  auto ad = [&](Idx x, Idx y) { return add[static_cast<size_t>(x) * m + y]; };
  auto ac = [&](Idx x, Idx r) {
    return action[static_cast<size_t>(x) * n + r];
  };

  Idx zero = -1;
  for (Idx z = 0; z < m && zero < 0; ++z) {
    bool ok = true;
    for (Idx x = 0; x < m && ok; ++x) ok = ad(z, x) == x && ad(x, z) == x;
    if (ok) zero = z;
  }
  if (zero < 0) fail(Errc::NotAGroup, label + ": no additive identity");
  for (Idx x = 0; x < m; ++x)
    for (Idx y = 0; y < m; ++y)
      if (ad(x, y) != ad(y, x))
        fail(Errc::NotAGroup, label + ": add not commutative at (" +
                                  std::to_string(x) + ", " + std::to_string(y) +
                                  ")");
  std::vector<Idx> neg(m, -1);
  for (Idx x = 0; x < m; ++x) {
    for (Idx y = 0; y < m; ++y)
      if (ad(x, y) == zero) {
        neg[x] = y;
        break;
      }
    if (neg[x] < 0)
      fail(Errc::NotAGroup,
           label + ": no additive inverse for " + std::to_string(x));
  }
  for (Idx x = 0; x < m; ++x)
    for (Idx y = 0; y < m; ++y)
      for (Idx z = 0; z < m; ++z)
        if (ad(ad(x, y), z) != ad(x, ad(y, z)))
          fail(Errc::NotAGroup, label + ": add not associative at (" +
                                    std::to_string(x) + ", " +
                                    std::to_string(y) + ", " +
                                    std::to_string(z) + ")");

  // Action axioms.
  for (Idx x = 0; x < m; ++x) {
    if (ac(x, R->one()) != x)
      fail(Errc::InvalidArgument,
           label + ": x*1 != x at " + std::to_string(x));
    for (Idx r = 0; r < n; ++r) {
      for (Idx s = 0; s < n; ++s) {
        if (ac(x, R->add(r, s)) != ad(ac(x, r), ac(x, s)))
          fail(Errc::InvalidArgument,
               label + ": x*(r+s) fails at x=" + std::to_string(x) +
                   " r=" + std::to_string(r) + " s=" + std::to_string(s));
        if (ac(x, R->mul(r, s)) != ac(ac(x, r), s))
          fail(Errc::InvalidArgument,
               label + ": x*(rs) fails at x=" + std::to_string(x) +
                   " r=" + std::to_string(r) + " s=" + std::to_string(s));
      }
    }
  }
  for (Idx x = 0; x < m; ++x)
    for (Idx y = 0; y < m; ++y)
      for (Idx r = 0; r < n; ++r)
        if (ac(ad(x, y), r) != ad(ac(x, r), ac(y, r)))
          fail(Errc::InvalidArgument,
               label + ": (x+y)*r fails at x=" + std::to_string(x) +
                   " y=" + std::to_string(y) + " r=" + std::to_string(r));

  FinModule M;
  M.ring_ = std::move(R);
  M.m_ = m;
  M.add_ = std::move(add);
  M.neg_ = std::move(neg);
  M.act_ = std::move(action);
  M.zero_ = zero;
  M.label_ = std::move(label);
  return M;
}

int FinModule::additive_order(Idx x) const {
  int k = 1;
  Idx y = x;
  while (y != zero_) {
    y = add(y, x);
    ++k;
  }
  return k;
}

ElemSet FinModule::principal_submodule(Idx x) const {
  ElemSet s(m_);
  for (Idx r = 0; r < ring_->order(); ++r) s.set(act(x, r));
  return s;
}

ElemSet FinModule::annihilator(Idx x) const {
  const int n = ring_->order();
  ElemSet s(n);
  for (Idx r = 0; r < n; ++r)
    if (act(x, r) == zero_) s.set(r);
  return s;
}

FinModule regular_module(std::shared_ptr<const FinRing> R) {
  // The ring tables already passed validation; reuse them directly.
  FinModule M;
  M.m_ = R->order();
  M.add_ = R->add_table();
  M.act_ = R->mul_table();
  M.neg_.resize(M.m_);
  for (Idx a = 0; a < M.m_; ++a) M.neg_[a] = R->neg(a);
  M.zero_ = R->zero();
  M.label_ = R->label() + " as right module";
  M.ring_ = std::move(R);
  return M;
}

FinModule free_module(std::shared_ptr<const FinRing> R, long rank,
                      const Budgets& b) {
  if (rank < 1) fail(Errc::InvalidArgument, "free rank must be >= 1");
  const int n = R->order();
  long m = 1;
  for (long i = 0; i < rank; ++i) {
    if (m > b.max_module_order / n)
      fail(Errc::SizeBudgetExceeded,
           "free(" + std::to_string(rank) + ") over " + R->label() +
               " exceeds the module order cap of " +
               std::to_string(b.max_module_order));
    m *= n;
  }
  const int M = static_cast<int>(m);
  auto decode = [&](long idx) {
    std::vector<Idx> d(rank);
    for (long i = rank - 1; i >= 0; --i) {
      d[i] = static_cast<Idx>(idx % n);
      idx /= n;
    }
    return d;
  };
  auto encode = [&](const std::vector<Idx>& d) {
    long idx = 0;
    for (long i = 0; i < rank; ++i) idx = idx * n + d[i];
    return static_cast<Idx>(idx);
  };
  std::vector<std::vector<Idx>> tuples(M);
  for (int x = 0; x < M; ++x) tuples[x] = decode(x);
  std::vector<Idx> add(static_cast<size_t>(M) * M), act(static_cast<size_t>(M) * n);
  std::vector<Idx> out(rank);
  for (int x = 0; x < M; ++x) {
    for (int y = 0; y < M; ++y) {
      for (long i = 0; i < rank; ++i)
        out[i] = R->add(tuples[x][i], tuples[y][i]);
      add[static_cast<size_t>(x) * M + y] = encode(out);
    }
    for (Idx r = 0; r < n; ++r) {
      for (long i = 0; i < rank; ++i) out[i] = R->mul(tuples[x][i], r);
      act[static_cast<size_t>(x) * n + r] = encode(out);
    }
  }
  std::string label = "free(" + std::to_string(rank) + ") over " + R->label();
  return FinModule::validate(std::move(R), M, std::move(add), std::move(act),
                             std::move(label));
}

namespace {

// Verifies S is a submodule of M (contains zero, closed under + and action).
void check_submodule(const FinModule& M, const ElemSet& S,
                     const std::string& what) {
  if (!S.test(M.zero()))
    fail(Errc::InvalidArgument, what + ": set does not contain zero");
  auto elems = S.elements();
  for (Idx x : elems) {
    for (Idx y : elems)
      if (!S.test(M.add(x, y)))
        fail(Errc::InvalidArgument, what + ": not closed under addition");
    for (Idx r = 0; r < M.ring().order(); ++r)
      if (!S.test(M.act(x, r)))
        fail(Errc::InvalidArgument, what + ": not closed under the action");
  }
}

}  // namespace

FinModule quotient_module(std::shared_ptr<const FinRing> R, const ElemSet& I,
                          std::string label) {
  FinModule RR = regular_module(R);
  check_submodule(RR, I, label);
  const int n = R->order();
  std::vector<Idx> coset(n, -1), rep;
  auto members = I.elements();
  for (Idx x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    Idx c = static_cast<Idx>(rep.size());
    rep.push_back(x);
    for (Idx i : members) coset[R->add(x, i)] = c;
  }
  const int m = static_cast<int>(rep.size());
  std::vector<Idx> add(static_cast<size_t>(m) * m), act(static_cast<size_t>(m) * n);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y)
      add[static_cast<size_t>(x) * m + y] = coset[R->add(rep[x], rep[y])];
    for (Idx r = 0; r < n; ++r)
      act[static_cast<size_t>(x) * n + r] = coset[R->mul(rep[x], r)];
  }
  return FinModule::validate(std::move(R), m, std::move(add), std::move(act),
                             std::move(label));
}

FinModule direct_sum(const FinModule& A, const FinModule& B,
                     const Budgets& b) {
  if (A.ring_ptr().get() != B.ring_ptr().get() &&
      !(A.ring().label() == B.ring().label() &&
        A.ring().order() == B.ring().order()))
    fail(Errc::InvalidArgument, "direct sum requires a common base ring");
  long m = static_cast<long>(A.order()) * B.order();
  if (m > b.max_module_order)
    fail(Errc::SizeBudgetExceeded,
         "direct sum exceeds the module order cap of " +
             std::to_string(b.max_module_order));
  const int M = static_cast<int>(m), nb = B.order(),
            n = A.ring().order();
  std::vector<Idx> add(static_cast<size_t>(M) * M), act(static_cast<size_t>(M) * n);
  for (int x = 0; x < M; ++x) {
    int xa = x / nb, xb = x % nb;
    for (int y = 0; y < M; ++y) {
      int ya = y / nb, yb = y % nb;
      add[static_cast<size_t>(x) * M + y] = A.add(xa, ya) * nb + B.add(xb, yb);
    }
    for (Idx r = 0; r < n; ++r)
      act[static_cast<size_t>(x) * n + r] = A.act(xa, r) * nb + B.act(xb, r);
  }
  std::string label = "sum(" + A.label() + ", " + B.label() + ")";
  return FinModule::validate(A.ring_ptr(), M, std::move(add), std::move(act),
                             std::move(label));
}

FinModule submodule_as_module(const FinModule& M, const ElemSet& S,
                              std::string label) {
  check_submodule(M, S, label);
  auto elems = S.elements();
  const int m = static_cast<int>(elems.size()), n = M.ring().order();
  std::vector<Idx> pos(M.order(), -1);
  for (int i = 0; i < m; ++i) pos[elems[i]] = i;
  std::vector<Idx> add(static_cast<size_t>(m) * m), act(static_cast<size_t>(m) * n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j)
      add[static_cast<size_t>(i) * m + j] = pos[M.add(elems[i], elems[j])];
    for (Idx r = 0; r < n; ++r)
      act[static_cast<size_t>(i) * n + r] = pos[M.act(elems[i], r)];
  }
  // Closure was checked above; the induced tables inherit the axioms.
  FinModule out;
  out.ring_ = M.ring_ptr();
  out.m_ = m;
  out.add_ = std::move(add);
  out.act_ = std::move(act);
  out.neg_.resize(m);
  for (int i = 0; i < m; ++i) out.neg_[i] = pos[M.neg(elems[i])];
  out.zero_ = pos[M.zero()];
  out.label_ = std::move(label);
  return out;
}

FinModule build_module(
    std::shared_ptr<const FinRing> R, const ModuleSpec& spec, const Budgets& b,
    const std::map<std::string, std::shared_ptr<const FinModule>>* env) {
  switch (spec.kind) {
    case ModuleSpec::Kind::Free:
      return free_module(std::move(R), spec.k, b);
    case ModuleSpec::Kind::Cyclic: {
      FinModule RR = regular_module(R);
      ElemSet I = generated_submodule(RR, spec.generators);
      return quotient_module(std::move(R),
                             I, "cyclic" + idx_list(spec.generators) +
                                    " over " + RR.ring().label());
    }
    case ModuleSpec::Kind::Sum: {
      if (spec.args.empty())
        fail(Errc::InvalidArgument, "sum() needs at least one component");
      FinModule acc = build_module(R, spec.args[0], b, env);
      for (size_t i = 1; i < spec.args.size(); ++i)
        acc = direct_sum(acc, build_module(R, spec.args[i], b, env), b);
      return acc;
    }
    case ModuleSpec::Kind::Ref: {
      if (!env || !env->count(spec.name))
        fail(Errc::UnknownConstructor,
             "undefined module name '" + spec.name + "'");
      return *env->at(spec.name);
    }
  }
  fail(Errc::InternalCheck, "unreachable module spec kind");
}

// ---------------------------------------------------------------------------
// Lattice machinery

ElemSet submodule_sum(const FinModule& M, const ElemSet& I, const ElemSet& J) {
  ElemSet res = J;
  // i + J is a coset; once any member of it is present the whole coset is,
  // so translated copies are only written for unseen coset representatives.
  I.for_each([&](Idx i) {
    if (res.test(i)) return;
    J.for_each([&](Idx j) { res.set(M.add(i, j)); });
  });
  return res;
}

ElemSet generated_submodule(const FinModule& M, const std::vector<Idx>& gens) {
  ElemSet acc(M.order());
  acc.set(M.zero());
  for (Idx g : gens) {
    if (g < 0 || g >= M.order())
      fail(Errc::InvalidArgument, "generator index out of range");
    acc = submodule_sum(M, acc, M.principal_submodule(g));
  }
  return acc;
}

std::vector<ElemSet> principal_submodules(const FinModule& M) {
  std::vector<ElemSet> out(M.order());
  for (Idx x = 0; x < M.order(); ++x) out[x] = M.principal_submodule(x);
  return out;
}

int SubmoduleLattice::index_of(const ElemSet& s) const {
  auto it = std::lower_bound(mods.begin(), mods.end(), s,
                             ElemSet::canonical_less);
  if (it == mods.end() || !(*it == s)) return -1;
  return static_cast<int>(it - mods.begin());
}

SubmoduleLattice all_submodules(const FinModule& M, long max_count) {
  std::unordered_map<ElemSet, int, ElemSetHash> seen;
  std::vector<ElemSet> found;
  auto intern = [&](ElemSet s) {
    auto [it, inserted] = seen.emplace(std::move(s), found.size());
    if (inserted) {
      found.push_back(it->first);
      if (static_cast<long>(found.size()) > max_count)
        fail(Errc::BudgetExceeded,
             M.label() + ": more than " + std::to_string(max_count) +
                 " submodules");
    }
  };

  ElemSet zero(M.order());
  zero.set(M.zero());
  intern(zero);
  std::vector<ElemSet> seeds;
  {
    std::unordered_map<ElemSet, int, ElemSetHash> seed_seen;
    for (Idx x = 0; x < M.order(); ++x) {
      ElemSet p = M.principal_submodule(x);
      if (seed_seen.emplace(p, 0).second) seeds.push_back(std::move(p));
    }
  }
  for (const ElemSet& s : seeds) intern(s);
  for (size_t i = 0; i < found.size(); ++i)
    for (const ElemSet& s : seeds) intern(submodule_sum(M, found[i], s));

  SubmoduleLattice L;
  L.mods = std::move(found);
  std::sort(L.mods.begin(), L.mods.end(), ElemSet::canonical_less);
  L.complete = true;
  for (size_t i = 0; i < L.mods.size(); ++i) {
    if (L.mods[i].count() == 1) L.zero_index = static_cast<int>(i);
    if (L.mods[i].count() == M.order()) L.full_index = static_cast<int>(i);
  }
  return L;
}

bool is_essential_in(const FinModule& M, const std::vector<ElemSet>& principal,
                     const ElemSet& I, const ElemSet& J) {
  if (!I.subset_of(J))
    fail(Errc::NotContained, "essentiality requires I to be a subset of J");
  bool essential = true;
  J.for_each([&](Idx x) {
    if (x == M.zero() || !essential) return;
    if (!principal[x].meets_outside(I, M.zero())) essential = false;
  });
  return essential;
}

std::vector<int> summand_indices(const FinModule& M,
                                 const SubmoduleLattice& L) {
  const int m = M.order();
  std::vector<int> out;
  for (size_t i = 0; i < L.mods.size(); ++i) {
    long ci = L.mods[i].count();
    bool summand = false;
    for (size_t j = 0; j < L.mods.size() && !summand; ++j) {
      if (ci * L.mods[j].count() != m) continue;
      summand = (L.mods[i] & L.mods[j]).only(M.zero());
    }
    if (summand) out.push_back(static_cast<int>(i));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphism search

ModuleProfile module_profile(const FinModule& M) {
  ModuleProfile p;
  p.size = M.order();
  std::map<int, int> orders, anns;
  for (Idx x = 0; x < M.order(); ++x) {
    ++orders[M.additive_order(x)];
    ++anns[M.annihilator(x).count()];
  }
  p.add_orders.assign(orders.begin(), orders.end());
  p.ann_sizes.assign(anns.begin(), anns.end());
  return p;
}

namespace {

// Greedy generating set: repeatedly take the element whose cyclic submodule
// adds the most new elements.
std::vector<Idx> greedy_generators(const FinModule& M) {
  std::vector<Idx> gens;
  ElemSet current(M.order());
  current.set(M.zero());
  while (current.count() < M.order()) {
    Idx best = -1;
    int best_gain = -1;
    for (Idx x = 0; x < M.order(); ++x) {
      if (current.test(x)) continue;
      int gain = submodule_sum(M, current, M.principal_submodule(x)).count();
      if (gain > best_gain) {
        best_gain = gain;
        best = x;
      }
    }
    gens.push_back(best);
    current = submodule_sum(M, current, M.principal_submodule(best));
  }
  return gens;
}

class HomSearch {
 public:
  HomSearch(const FinModule& M, const FinModule& N, const Budgets& b, bool iso)
      : M_(M), N_(N), budget_(b.max_assignments), iso_(iso) {
    gens_ = greedy_generators(M_);
    ann_m_.reserve(M_.order());
    for (Idx x = 0; x < M_.order(); ++x) ann_m_.push_back(M_.annihilator(x));
    ann_n_.reserve(N_.order());
    for (Idx v = 0; v < N_.order(); ++v) ann_n_.push_back(N_.annihilator(v));
    ord_m_.resize(M_.order());
    for (Idx x = 0; x < M_.order(); ++x) ord_m_[x] = M_.additive_order(x);
    ord_n_.resize(N_.order());
    for (Idx v = 0; v < N_.order(); ++v) ord_n_[v] = N_.additive_order(v);
    img_.assign(M_.order(), -1);
    if (iso_) used_.assign(N_.order(), false);
  }

  // Runs the search; `emit` gets each complete value table. Returning false
  // from emit stops the search.
  template <typename F>
  void run(F&& emit) {
    size_t base = trail_.size();
    if (!assign(M_.zero(), N_.zero()) || !propagate(0)) {
      undo(base);
      return;
    }
    dfs(0, emit);
    undo(base);
  }

 private:
  bool candidate_ok(Idx g, Idx v) const {
    if (iso_)
      return ord_m_[g] == ord_n_[v] && ann_m_[g] == ann_n_[v];
    return ord_m_[g] % ord_n_[v] == 0 && ann_m_[g].subset_of(ann_n_[v]);
  }

  bool assign(Idx x, Idx v) {
    if (img_[x] >= 0) return img_[x] == v;
    if (iso_) {
      if (used_[v]) return false;
      used_[v] = true;
    }
    img_[x] = v;
    trail_.push_back(x);
    return true;
  }

  // Closes the trail from position `from` under addition and the action.
  bool propagate(size_t from) {
    for (size_t qi = from; qi < trail_.size(); ++qi) {
      Idx x = trail_[qi];
      Idx vx = img_[x];
      for (Idx r = 0; r < M_.ring().order(); ++r)
        if (!assign(M_.act(x, r), N_.act(vx, r))) return false;
      // Pair every known element with x once; later discoveries revisit x
      // from their own turn.
      size_t limit = trail_.size();
      for (size_t k = 0; k < limit; ++k) {
        Idx y = trail_[k];
        if (!assign(M_.add(x, y), N_.add(vx, img_[y]))) return false;
      }
    }
    return true;
  }

  void undo(size_t mark) {
    while (trail_.size() > mark) {
      Idx x = trail_.back();
      trail_.pop_back();
      if (iso_) used_[img_[x]] = false;
      img_[x] = -1;
    }
  }

  template <typename F>
  bool dfs(size_t gi, F&& emit) {
    while (gi < gens_.size() && img_[gens_[gi]] >= 0) ++gi;
    if (gi == gens_.size()) return emit(img_);
    Idx g = gens_[gi];
    for (Idx v = 0; v < N_.order(); ++v) {
      if (!candidate_ok(g, v)) continue;
      if (++nodes_ > budget_)
        fail(Errc::BudgetExceeded,
             "hom search between " + M_.label() + " and " + N_.label() +
                 " exceeded " + std::to_string(budget_) + " assignments");
      size_t mark = trail_.size();
      if (assign(g, v) && propagate(mark)) {
        if (!dfs(gi + 1, emit)) return false;
      }
      undo(mark);
    }
    return true;
  }

  const FinModule& M_;
  const FinModule& N_;
  long budget_;
  bool iso_;
  std::vector<Idx> gens_;
  std::vector<ElemSet> ann_m_, ann_n_;
  std::vector<int> ord_m_, ord_n_;
  std::vector<Idx> img_;
  std::vector<bool> used_;
  std::vector<Idx> trail_;
  long nodes_ = 0;
};

}  // namespace

bool modules_isomorphic(const FinModule& M, const FinModule& N,
                        const Budgets& b) {
  if (M.order() != N.order()) return false;
  if (M.ring().order() != N.ring().order())
    fail(Errc::InvalidArgument, "isomorphism test requires a common ring");
  if (!(module_profile(M) == module_profile(N))) return false;
  bool found = false;
  HomSearch search(M, N, b, /*iso=*/true);
  search.run([&](const std::vector<Idx>&) {
    found = true;
    return false;  // stop at the first witness
  });
  return found;
}

std::vector<std::vector<Idx>> all_homs(const FinModule& M, const FinModule& N,
                                       const Budgets& b) {
  std::vector<std::vector<Idx>> out;
  HomSearch search(M, N, b, /*iso=*/false);
  search.run([&](const std::vector<Idx>& val) {
    out.push_back(val);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool is_module_hom(const FinModule& M, const FinModule& N,
                   const std::vector<Idx>& val) {
  if (val.size() != static_cast<size_t>(M.order())) return false;
  for (Idx x = 0; x < M.order(); ++x) {
    for (Idx y = 0; y < M.order(); ++y)
      if (val[M.add(x, y)] != N.add(val[x], val[y])) return false;
    for (Idx r = 0; r < M.ring().order(); ++r)
      if (val[M.act(x, r)] != N.act(val[x], r)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Endomorphism ring

int EndRing::index_of(const std::vector<Idx>& val) const {
  auto it = std::lower_bound(homs.begin(), homs.end(), val);
  if (it == homs.end() || *it != val) return -1;
  return static_cast<int>(it - homs.begin());
}

EndRing endomorphism_ring(const FinModule& M, const Budgets& b) {
  std::vector<std::vector<Idx>> homs = all_homs(M, M, b);
  const int e = static_cast<int>(homs.size());
  auto index_of = [&](const std::vector<Idx>& val) {
    auto it = std::lower_bound(homs.begin(), homs.end(), val);
    if (it == homs.end() || *it != val)
      fail(Errc::InternalCheck,
           "endomorphisms of " + M.label() + " not closed under operations");
    return static_cast<Idx>(it - homs.begin());
  };
  RawTables t;
  t.order = e;
  t.add.resize(static_cast<size_t>(e) * e);
  t.mul.resize(static_cast<size_t>(e) * e);
  std::vector<Idx> tmp(M.order());
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) {
      for (Idx x = 0; x < M.order(); ++x)
        tmp[x] = M.add(homs[i][x], homs[j][x]);
      t.add[static_cast<size_t>(i) * e + j] = index_of(tmp);
      for (Idx x = 0; x < M.order(); ++x) tmp[x] = homs[i][homs[j][x]];
      t.mul[static_cast<size_t>(i) * e + j] = index_of(tmp);
    }
  return EndRing{FinRing::validate(std::move(t), "End(" + M.label() + ")"),
                 std::move(homs)};
}

// ---------------------------------------------------------------------------
// CS conditions

bool cs_c1(const FinModule& M, const SubmoduleLattice& L,
           const std::vector<ElemSet>& principal,
           const std::vector<int>& summand_idx, std::optional<int>* witness) {
  for (size_t i = 0; i < L.mods.size(); ++i) {
    bool placed = false;
    for (int s : summand_idx) {
      if (!L.mods[i].subset_of(L.mods[s])) continue;
      if (is_essential_in(M, principal, L.mods[i], L.mods[s])) {
        placed = true;
        break;
      }
    }
    if (!placed) {
      if (witness) *witness = static_cast<int>(i);
      return false;
    }
  }
  return true;
}

bool cs_c2(const FinModule& M, const SubmoduleLattice& L,
           const std::vector<int>& summand_idx, const Budgets& b,
           std::optional<std::pair<int, int>>* witness) {
  std::vector<bool> is_summand(L.mods.size(), false);
  for (int s : summand_idx) is_summand[s] = true;

  // Materialize summands (plus profiles) once.
  std::vector<FinModule> summods;
  std::vector<ModuleProfile> sumprof;
  summods.reserve(summand_idx.size());
  for (int s : summand_idx) {
    summods.push_back(
        submodule_as_module(M, L.mods[s], "summand#" + std::to_string(s)));
    sumprof.push_back(module_profile(summods.back()));
  }
  for (size_t i = 0; i < L.mods.size(); ++i) {
    if (is_summand[i]) continue;
    std::optional<FinModule> sub;
    std::optional<ModuleProfile> prof;
    for (size_t k = 0; k < summods.size(); ++k) {
      if (L.mods[static_cast<size_t>(summand_idx[k])].count() !=
          L.mods[i].count())
        continue;
      if (!sub) {
        sub = submodule_as_module(M, L.mods[i],
                                  "submodule#" + std::to_string(i));
        prof = module_profile(*sub);
      }
      if (!(*prof == sumprof[k])) continue;
      if (modules_isomorphic(*sub, summods[k], b)) {
        if (witness) *witness = {static_cast<int>(i), summand_idx[k]};
        return false;
      }
    }
  }
  return true;
}

bool cs_c3(const FinModule& M, const SubmoduleLattice& L,
           const std::vector<int>& summand_idx,
           std::optional<std::pair<int, int>>* witness) {
  std::vector<bool> is_summand(L.mods.size(), false);
  for (int s : summand_idx) is_summand[s] = true;
  for (int a : summand_idx)
    for (int b : summand_idx) {
      if (b <= a) continue;
      if (!(L.mods[a] & L.mods[b]).only(M.zero())) continue;
      ElemSet sum = submodule_sum(M, L.mods[a], L.mods[b]);
      int k = L.index_of(sum);
      if (k < 0)
        fail(Errc::InternalCheck, "sum of submodules missing from lattice");
      if (!is_summand[k]) {
        if (witness) *witness = {a, b};
        return false;
      }
    }
  return true;
}

ElemSet singular_submodule(const FinModule& M) {
  const FinRing& R = M.ring();
  std::vector<ElemSet> ring_principal(R.order());
  for (Idx y = 0; y < R.order(); ++y)
    ring_principal[y] = R.principal_right_ideal(y);
  ElemSet Z(M.order());
  for (Idx x = 0; x < M.order(); ++x) {
    ElemSet ann = M.annihilator(x);
    bool essential = true;
    for (Idx y = 0; y < R.order() && essential; ++y) {
      if (y == R.zero()) continue;
      essential = ring_principal[y].meets_outside(ann, R.zero());
    }
    if (essential) Z.set(x);
  }
  // Z(M) must come out as a submodule; anything else is a bug.
  Z.for_each([&](Idx x) {
    Z.for_each([&](Idx y) {
      if (!Z.test(M.add(x, y)))
        fail(Errc::InternalCheck, "singular set not closed under addition");
    });
    for (Idx r = 0; r < R.order(); ++r)
      if (!Z.test(M.act(x, r)))
        fail(Errc::InternalCheck, "singular set not closed under the action");
  });
  return Z;
}

ModuleClassReport module_class(const FinModule& M, const Budgets& b) {
  ModuleClassReport rep;
  rep.order = M.order();
  SubmoduleLattice L = all_submodules(M, b.max_ideals);
  rep.submodule_count = static_cast<int>(L.mods.size());
  auto principal = principal_submodules(M);
  auto summands = summand_indices(M, L);
  rep.summand_count = static_cast<int>(summands.size());
  rep.cs.c1 = cs_c1(M, L, principal, summands, &rep.cs.c1_witness);
  rep.cs.c2 = cs_c2(M, L, summands, b, &rep.cs.c2_witness);
  rep.cs.c3 = cs_c3(M, L, summands, &rep.cs.c3_witness);
  rep.quasi_continuous = rep.cs.c1 && rep.cs.c3;
  rep.continuous = rep.cs.c1 && rep.cs.c2;
  ElemSet Z = singular_submodule(M);
  rep.singular = Z.elements();
  rep.nonsingular = Z.only(M.zero());
  EndRing E = endomorphism_ring(M, b);
  rep.end_order = E.ring.order();
  CleannessReport cr = classify_cleanness(E.ring);
  rep.clean = cr.clean.value;
  rep.almost_clean = cr.almost_clean.value;
  return rep;
}

// ---------------------------------------------------------------------------
// Endomorphism decompositions

bool is_mono(const std::vector<Idx>& val) {
  std::vector<bool> seen(val.size(), false);
  for (Idx v : val) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool is_essential_mono(const FinModule& M,
                       const std::vector<ElemSet>& principal,
                       const std::vector<Idx>& val) {
  if (!is_mono(val)) return false;
  ElemSet image(M.order());
  for (Idx v : val) image.set(v);
  ElemSet whole(M.order());
  for (Idx x = 0; x < M.order(); ++x) whole.set(x);
  return is_essential_in(M, principal, image, whole);
}

EndoDecomposition endo_decompose(const FinModule& M, const EndRing& E, int f) {
  if (f < 0 || f >= E.ring.order())
    fail(Errc::InvalidArgument, "endomorphism index out of range");
  auto principal = principal_submodules(M);
  std::optional<EndoDecomposition> mono;
  for (Idx e = 0; e < E.ring.order(); ++e) {
    if (E.ring.mul(e, e) != e) continue;
    Idx u = E.ring.sub(static_cast<Idx>(f), e);
    const auto& uval = E.homs[u];
    if (!is_mono(uval)) continue;
    if (is_essential_mono(M, principal, uval))
      return {static_cast<int>(e), static_cast<int>(u),
              EndoKind::EssentialMono};
    if (!mono) mono = {static_cast<int>(e), static_cast<int>(u), EndoKind::Mono};
  }
  if (mono) return *mono;
  fail(Errc::NoDecomposition,
       "no idempotent-plus-monomorphism decomposition for endomorphism " +
           std::to_string(f) + " of " + M.label());
}

CsLevelReport cs_level(std::shared_ptr<const FinRing> R, int kmax,
                       const Budgets& b) {
  CsLevelReport rep;
  for (int k = 1; k <= kmax; ++k) {
    FinModule F = [&]() {
      try {
        return free_module(R, k, b);
      } catch (const Error& err) {
        if (err.code() == Errc::SizeBudgetExceeded)
          fail(Errc::BudgetExceeded,
               "free(" + std::to_string(k) + ") over " + R->label() +
                   " is out of budget");
        throw;
      }
    }();
    SubmoduleLattice L = all_submodules(F, b.max_ideals);
    auto principal = principal_submodules(F);
    auto summands = summand_indices(F, L);
    bool cs = cs_c1(F, L, principal, summands, nullptr);
    rep.cs_at.push_back(cs);
    if (cs) rep.largest = k;
  }
  return rep;
}

}  // namespace ringlab
