#ifndef RINGLAB_FINRING_HPP_
#define RINGLAB_FINRING_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/elemset.hpp"
#include "ringlab/error.hpp"

namespace ringlab {

// Operation tables as read from a file or emitted by a constructor, before
// any axiom has been checked.
struct RawTables {
  int order = 0;
  std::vector<Idx> add;  // order*order, row-major
  std::vector<Idx> mul;  // order*order, row-major
  std::optional<std::vector<Idx>> star;
};

// A finite unital ring on the index set {0..order-1}, immutable once
// validated. The one-element ring (0 = 1) is allowed.
class FinRing {
 public:
  // Checks every ring axiom by full table scan and derives zero, one and
  // the negation table. Throws Error with the first failing witness.
  static FinRing validate(RawTables tables, std::string label);

  int order() const { return n_; }
  const std::string& label() const { return label_; }

  Idx add(Idx a, Idx b) const { return add_[static_cast<size_t>(a) * n_ + b]; }
  Idx mul(Idx a, Idx b) const { return mul_[static_cast<size_t>(a) * n_ + b]; }
  Idx neg(Idx a) const { return neg_[a]; }
  Idx sub(Idx a, Idx b) const { return add(a, neg_[b]); }
  Idx zero() const { return zero_; }
  Idx one() const { return one_; }

  bool has_star() const { return !star_.empty(); }
  Idx star(Idx a) const { return star_[a]; }

  // Additive order of a (smallest k >= 1 with k*a = 0).
  int additive_order(Idx a) const;
  // Additive order of 1, i.e. the characteristic.
  int characteristic() const { return additive_order(one_); }

  // {a*x : x in R} as a bitset.
  ElemSet principal_right_ideal(Idx a) const;
  // {x*a : x in R}.
  ElemSet principal_left_ideal(Idx a) const;
  // {x : a*x = 0}.
  ElemSet right_annihilator(Idx a) const;
  // {x : x*a = 0}.
  ElemSet left_annihilator(Idx a) const;

  // Same carrier with reversed multiplication. Left-sided questions about
  // R are right-sided questions about the result.
  FinRing opposite() const;

  // Copy of this ring with the given involution table, re-validated.
  FinRing with_star(std::vector<Idx> star, std::string label) const;
  // Copy with the involution dropped.
  FinRing without_star() const;

  void set_label(std::string label) { label_ = std::move(label); }

  const std::vector<Idx>& add_table() const { return add_; }
  const std::vector<Idx>& mul_table() const { return mul_; }
  const std::vector<Idx>& star_table() const { return star_; }

 private:
  FinRing() = default;

  int n_ = 0;
  std::vector<Idx> add_, mul_, neg_, star_;
  Idx zero_ = 0, one_ = 0;
  std::string label_;
};

// Invariant vector used to spot (non-)isomorphic catalog entries cheaply.
// Equal fingerprints do not imply isomorphism; unequal ones refute it.
struct Fingerprint {
  int64_t order = 0;
  int64_t idempotents = 0;
  int64_t units = 0;
  int64_t central = 0;
  int64_t characteristic = 0;
  uint64_t additive_order_digest = 0;

  bool operator==(const Fingerprint&) const = default;
  std::string to_string() const;
  // Short stable hex token, used in file names of search findings.
  std::string hash_token() const;
};

Fingerprint fingerprint(const FinRing& R);

}  // namespace ringlab

#endif  // RINGLAB_FINRING_HPP_
