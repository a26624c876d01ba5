#ifndef RINGLAB_ELEMSET_HPP_
#define RINGLAB_ELEMSET_HPP_

#include <cstdint>
#include <functional>
#include <vector>

namespace ringlab {

using Idx = int;

// A set of element indices backed by a word array. Right ideals and
// submodules are stored this way; the closure loops below depend on the
// word-level AND/OR being cheap.
class ElemSet {
 public:
  ElemSet() : n_(0) {}
  explicit ElemSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  int universe() const { return n_; }

  void set(Idx i) { w_[static_cast<size_t>(i) >> 6] |= 1ull << (i & 63); }
  void reset(Idx i) { w_[static_cast<size_t>(i) >> 6] &= ~(1ull << (i & 63)); }
  bool test(Idx i) const {
    return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }

  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }

  bool subset_of(const ElemSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool intersects(const ElemSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  // True iff the intersection contains an index other than `zero`.
  bool meets_outside(const ElemSet& o, Idx zero) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t w = w_[i] & o.w_[i];
      if (static_cast<size_t>(zero) >> 6 == i) w &= ~(1ull << (zero & 63));
      if (w) return true;
    }
    return false;
  }

  // True iff the only element present (if any) is `zero`.
  bool only(Idx zero) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t w = w_[i];
      if (static_cast<size_t>(zero) >> 6 == i) w &= ~(1ull << (zero & 63));
      if (w) return false;
    }
    return true;
  }

  ElemSet& operator|=(const ElemSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  ElemSet operator&(const ElemSet& o) const {
    ElemSet r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }

  ElemSet operator|(const ElemSet& o) const {
    ElemSet r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
  }

  bool operator==(const ElemSet& o) const = default;

  // Ascending member list.
  std::vector<Idx> elements() const {
    std::vector<Idx> out;
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t w = w_[i];
      while (w) {
        int b = __builtin_ctzll(w);
        out.push_back(static_cast<Idx>(i * 64 + b));
        w &= w - 1;
      }
    }
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t w = w_[i];
      while (w) {
        int b = __builtin_ctzll(w);
        f(static_cast<Idx>(i * 64 + b));
        w &= w - 1;
      }
    }
  }

  const std::vector<uint64_t>& words() const { return w_; }

  size_t hash() const {
    uint64_t h = 1469598103934665603ull;
    for (uint64_t w : w_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }

  // Total order used to put ideal lists in a reproducible order:
  // by cardinality, then by member list.
  static bool canonical_less(const ElemSet& a, const ElemSet& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    for (size_t i = 0; i < a.w_.size(); ++i) {
      // Lower indices live in lower words and lower bits; compare bit-reversed
      // words so that the set with the smaller first member sorts first.
      uint64_t wa = reverse_bits(a.w_[i]), wb = reverse_bits(b.w_[i]);
      if (wa != wb) return wa > wb;
    }
    return false;
  }

 private:
  static uint64_t reverse_bits(uint64_t v) {
    v = ((v >> 1) & 0x5555555555555555ull) | ((v & 0x5555555555555555ull) << 1);
    v = ((v >> 2) & 0x3333333333333333ull) | ((v & 0x3333333333333333ull) << 2);
    v = ((v >> 4) & 0x0F0F0F0F0F0F0F0Full) | ((v & 0x0F0F0F0F0F0F0F0Full) << 4);
    v = ((v >> 8) & 0x00FF00FF00FF00FFull) | ((v & 0x00FF00FF00FF00FFull) << 8);
    v = ((v >> 16) & 0x0000FFFF0000FFFFull) |
        ((v & 0x0000FFFF0000FFFFull) << 16);
    return (v >> 32) | (v << 32);
  }

  int n_;
  std::vector<uint64_t> w_;
};

struct ElemSetHash {
  size_t operator()(const ElemSet& s) const { return s.hash(); }
};

}  // namespace ringlab

#endif  // RINGLAB_ELEMSET_HPP_
