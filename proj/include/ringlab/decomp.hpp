#ifndef RINGLAB_DECOMP_HPP_
#define RINGLAB_DECOMP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ringlab/elements.hpp"
#include "ringlab/finring.hpp"

namespace ringlab {

// Families of additive decompositions a = e + u with e idempotent.
// "Special" additionally requires aR and eR to intersect trivially; the
// star variants require e to be a projection (and nothing extra of u).
enum class CleanFamily { Clean, AlmostClean, SpecialClean, SpecialAlmostClean };

struct DecompKind {
  CleanFamily family = CleanFamily::Clean;
  bool star = false;
};

std::optional<DecompKind> decomp_kind_from_name(const std::string& name);
std::string decomp_kind_name(DecompKind kind);

struct Decomposition {
  Idx a = 0;
  Idx e = 0;  // the idempotent; identifies the decomposition
  Idx u = 0;  // a - e
  bool u_is_unit = false;
  bool u_is_regular = false;
  bool special = false;  // aR meets eR only in 0
  bool e_is_projection = false;
};

// All decompositions of `a` of the requested kind, ordered by ascending
// idempotent index. Empty result is a valid outcome.
std::vector<Decomposition> decompositions(const FinRing& R,
                                          const ElementClassification& cls,
                                          Idx a, DecompKind kind);
std::vector<Decomposition> decompositions(const FinRing& R, Idx a,
                                          DecompKind kind);

// A ring-level flag with the least-index counterexample when false.
struct FlagW {
  bool value = false;
  std::optional<Idx> counterexample;

  explicit operator bool() const { return value; }
};

struct CleannessReport {
  bool has_star = false;
  FlagW clean, almost_clean, special_clean, special_almost_clean;
  FlagW uniquely_special_clean, uniquely_special_almost_clean;
  // Only meaningful when has_star.
  FlagW star_clean, almost_star_clean, special_star_clean,
      special_almost_star_clean;
  FlagW uniquely_special_star_clean, uniquely_special_almost_star_clean;
};

CleannessReport classify_cleanness(const FinRing& R,
                                   const ElementClassification& cls);
CleannessReport classify_cleanness(const FinRing& R);

// For an abelian ring whose right annihilators are generated by
// idempotents, returns the decomposition a = e + (a - e) where
// ann_r(a) = eR. The result is checked to be special almost clean before
// it is returned. Throws NotAbelian or NotRickartAt(a).
Decomposition rickart_witness(const FinRing& R,
                              const ElementClassification& cls, Idx a);
Decomposition rickart_witness(const FinRing& R, Idx a);

}  // namespace ringlab

#endif  // RINGLAB_DECOMP_HPP_
