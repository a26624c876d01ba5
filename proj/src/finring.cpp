#include "ringlab/finring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ringlab {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotAGroup: return "NotAGroup";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NotDistributive: return "NotDistributive";
    case Errc::BadInvolution: return "BadInvolution";
    case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Errc::SizeBudgetExceeded: return "SizeBudgetExceeded";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownConstructor: return "UnknownConstructor";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotContained: return "NotContained";
    case Errc::NotRickartAt: return "NotRickartAt";
    case Errc::NotAbelian: return "NotAbelian";
    case Errc::NoDecomposition: return "NoDecomposition";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::IoError: return "IoError";
    case Errc::InternalCheck: return "InternalCheck";
  }
  return "Error";
}

namespace {

std::string triple(Idx a, Idx b, Idx c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

void check_table(const std::vector<Idx>& t, size_t expect, int n,
                 const std::string& what, const std::string& label) {
  if (t.size() != expect)
    fail(Errc::InvalidArgument,
         label + ": " + what + " table has " + std::to_string(t.size()) +
             " entries, expected " + std::to_string(expect));
  for (Idx v : t)
    if (v < 0 || v >= n)
      fail(Errc::InvalidArgument,
           label + ": " + what + " table entry " + std::to_string(v) +
               " out of range");
}

}  // namespace

FinRing FinRing::validate(RawTables t, std::string label) {
  const int n = t.order;
  if (n <= 0) fail(Errc::InvalidArgument, label + ": order must be positive");
  const size_t nn = static_cast<size_t>(n) * n;
  check_table(t.add, nn, n, "add", label);
  check_table(t.mul, nn, n, "mul", label);
  if (t.star) check_table(*t.star, static_cast<size_t>(n), n, "star", label);

  auto add = [&](Idx a, Idx b) { return t.add[static_cast<size_t>(a) * n + b]; };
  auto mul = [&](Idx a, Idx b) { return t.mul[static_cast<size_t>(a) * n + b]; };

  // Additive identity.
  Idx zero = -1;
  for (Idx z = 0; z < n && zero < 0; ++z) {
    bool ok = true;
    for (Idx x = 0; x < n && ok; ++x)
      ok = add(z, x) == x && add(x, z) == x;
    if (ok) zero = z;
  }
  if (zero < 0) fail(Errc::NotAGroup, label + ": no additive identity");

  // Commutativity and inverses.
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b)
      if (add(a, b) != add(b, a))
        fail(Errc::NotAGroup, label + ": add not commutative at (" +
                                  std::to_string(a) + ", " + std::to_string(b) +
                                  ")");
  std::vector<Idx> neg(n, -1);
  for (Idx a = 0; a < n; ++a) {
    for (Idx b = 0; b < n; ++b)
      if (add(a, b) == zero) {
        neg[a] = b;
        break;
      }
    if (neg[a] < 0)
      fail(Errc::NotAGroup,
           label + ": no additive inverse for " + std::to_string(a));
  }
  // Additive associativity.
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b)
      for (Idx c = 0; c < n; ++c)
        if (add(add(a, b), c) != add(a, add(b, c)))
          fail(Errc::NotAGroup,
               label + ": add not associative at " + triple(a, b, c));

  // Multiplicative associativity.
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b)
      for (Idx c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          fail(Errc::NotAssociative,
               label + ": mul not associative at " + triple(a, b, c));

  // Two-sided multiplicative identity.
  Idx one = -1;
  for (Idx e = 0; e < n && one < 0; ++e) {
    bool ok = true;
    for (Idx x = 0; x < n && ok; ++x)
      ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) one = e;
  }
  if (one < 0) fail(Errc::NoIdentity, label + ": no multiplicative identity");

  // Distributivity, both sides.
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b)
      for (Idx c = 0; c < n; ++c) {
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
          fail(Errc::NotDistributive,
               label + ": left distributivity fails at " + triple(a, b, c));
        if (mul(add(a, b), c) != add(mul(a, c), mul(b, c)))
          fail(Errc::NotDistributive,
               label + ": right distributivity fails at " + triple(a, b, c));
      }

  if (t.star) {
    const auto& s = *t.star;
    for (Idx a = 0; a < n; ++a)
      if (s[s[a]] != a)
        fail(Errc::BadInvolution,
             label + ": star not involutive at " + std::to_string(a));
    if (s[one] != one)
      fail(Errc::BadInvolution, label + ": star(1) != 1");
    for (Idx a = 0; a < n; ++a)
      for (Idx b = 0; b < n; ++b) {
        if (s[add(a, b)] != add(s[a], s[b]))
          fail(Errc::BadInvolution, label + ": star not additive at (" +
                                        std::to_string(a) + ", " +
                                        std::to_string(b) + ")");
        if (s[mul(a, b)] != mul(s[b], s[a]))
          fail(Errc::BadInvolution,
               label + ": (ab)* != b*a* at (" + std::to_string(a) + ", " +
                   std::to_string(b) + ")");
      }
  }

  FinRing R;
  R.n_ = n;
  R.add_ = std::move(t.add);
  R.mul_ = std::move(t.mul);
  R.neg_ = std::move(neg);
  if (t.star) R.star_ = std::move(*t.star);
  R.zero_ = zero;
  R.one_ = one;
  R.label_ = std::move(label);
  return R;
}

int FinRing::additive_order(Idx a) const {
  int k = 1;
  Idx x = a;
  while (x != zero_) {
    x = add(x, a);
    ++k;
  }
  return k;
}

ElemSet FinRing::principal_right_ideal(Idx a) const {
  ElemSet s(n_);
  for (Idx x = 0; x < n_; ++x) s.set(mul(a, x));
  return s;
}

ElemSet FinRing::principal_left_ideal(Idx a) const {
  ElemSet s(n_);
  for (Idx x = 0; x < n_; ++x) s.set(mul(x, a));
  return s;
}

ElemSet FinRing::right_annihilator(Idx a) const {
  ElemSet s(n_);
  for (Idx x = 0; x < n_; ++x)
    if (mul(a, x) == zero_) s.set(x);
  return s;
}

ElemSet FinRing::left_annihilator(Idx a) const {
  ElemSet s(n_);
  for (Idx x = 0; x < n_; ++x)
    if (mul(x, a) == zero_) s.set(x);
  return s;
}

FinRing FinRing::opposite() const {
  FinRing R = *this;
  for (Idx a = 0; a < n_; ++a)
    for (Idx b = 0; b < n_; ++b)
      R.mul_[static_cast<size_t>(a) * n_ + b] =
          mul_[static_cast<size_t>(b) * n_ + a];
  R.label_ = "opposite(" + label_ + ")";
  // star is its own anti-automorphism, so it survives reversal.
  return R;
}

FinRing FinRing::with_star(std::vector<Idx> star, std::string label) const {
  RawTables t{n_, add_, mul_, std::move(star)};
  return validate(std::move(t), std::move(label));
}

FinRing FinRing::without_star() const {
  FinRing R = *this;
  R.star_.clear();
  return R;
}

Fingerprint fingerprint(const FinRing& R) {
  const int n = R.order();
  Fingerprint fp;
  fp.order = n;
  fp.characteristic = R.characteristic();
  std::map<int, int> order_counts;
  for (Idx a = 0; a < n; ++a) {
    if (R.mul(a, a) == a) ++fp.idempotents;
    bool central = true;
    for (Idx x = 0; x < n && central; ++x) central = R.mul(a, x) == R.mul(x, a);
    if (central) ++fp.central;
    for (Idx b = 0; b < n; ++b)
      if (R.mul(a, b) == R.one() && R.mul(b, a) == R.one()) {
        ++fp.units;
        break;
      }
    ++order_counts[R.additive_order(a)];
  }
  uint64_t h = 1469598103934665603ull;
  auto mix = [&](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (auto [ord, cnt] : order_counts) {
    mix(static_cast<uint64_t>(ord));
    mix(static_cast<uint64_t>(cnt));
  }
  fp.additive_order_digest = h;
  return fp;
}

std::string Fingerprint::to_string() const {
  std::ostringstream os;
  os << "(order=" << order << " idem=" << idempotents << " units=" << units
     << " central=" << central << " char=" << characteristic << " addord="
     << std::hex << additive_order_digest << std::dec << ")";
  return os.str();
}

std::string Fingerprint::hash_token() const {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<uint64_t>(order));
  mix(static_cast<uint64_t>(idempotents));
  mix(static_cast<uint64_t>(units));
  mix(static_cast<uint64_t>(central));
  mix(static_cast<uint64_t>(characteristic));
  mix(additive_order_digest);
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace ringlab
