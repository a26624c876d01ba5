#ifndef RINGLAB_CLAIMS_HPP_
#define RINGLAB_CLAIMS_HPP_

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ringlab/analysis.hpp"
#include "ringlab/catalog.hpp"

namespace ringlab {

enum class Verdict { Holds, HypothesisNotMet, Violated, Skipped };

const char* verdict_name(Verdict v);

struct InstanceVerdict {
  std::string instance;
  Verdict verdict = Verdict::Holds;
  std::string witness;  // counterexample description or skip reason
  double millis = 0.0;
};

struct ClaimReport {
  std::string claim;
  std::string title;
  std::string catalog_digest;
  std::vector<InstanceVerdict> rows;
  int holds = 0, hypothesis_not_met = 0, violated = 0, skipped = 0;

  void tally();
};

struct PairAnalysis {
  const EmbeddingPair* pair = nullptr;
  std::unique_ptr<RingAnalysis> r;
  std::unique_ptr<RingAnalysis> q;
};

// Instance kinds a claim quantifies over.
enum ClaimScope : unsigned {
  kRings = 1u,
  kStarRings = 2u,  // rings carrying an involution
  kModules = 4u,
  kPairs = 8u,
  kStarPairs = 16u,
};

struct Claim {
  std::string id;
  std::string title;
  unsigned scope = 0;
  std::function<Verdict(RingAnalysis&, std::string&)> ring_eval;
  std::function<Verdict(ModuleAnalysis&, std::string&)> module_eval;
  std::function<Verdict(PairAnalysis&, std::string&)> pair_eval;
};

const std::vector<Claim>& all_claims();
const Claim* find_claim(const std::string& id);

// Runs the given claims over the catalog. Instances are processed
// independently (in `jobs` parallel workers, 0 = hardware default); every
// claim touching an instance shares that instance's memoized analysis.
// Rows are ordered by catalog position, so output is deterministic.
std::vector<ClaimReport> run_claims(const std::vector<const Claim*>& claims,
                                    const Catalog& cat, const Budgets& b,
                                    int jobs = 1);

ClaimReport run_claim(const std::string& id, const Catalog& cat,
                      const Budgets& b, int jobs = 1);

}  // namespace ringlab

#endif  // RINGLAB_CLAIMS_HPP_
