#ifndef RINGLAB_SEARCH_HPP_
#define RINGLAB_SEARCH_HPP_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ringlab/analysis.hpp"
#include "ringlab/ringspec.hpp"

namespace ringlab {

// Boolean formula over report flags: identifiers, '&', '|', '!' and
// parentheses. Unknown identifiers are rejected at parse time.
class Predicate {
 public:
  static Predicate parse(const std::string& text);

  bool eval(RingAnalysis& a) const;
  const std::vector<std::string>& flags() const { return flags_; }
  const std::string& text() const { return text_; }

 private:
  struct Node {
    enum class Op { Flag, And, Or, Not } op;
    int a = -1, b = -1;  // child node indices
    std::string flag;
  };
  bool eval_node(int idx, RingAnalysis& a) const;

  std::vector<Node> nodes_;
  int root_ = -1;
  std::vector<std::string> flags_;
  std::string text_;
};

struct SearchConfig {
  long max_order = 16;
  long max_instances = 10000;  // candidate rings to classify
  int max_depth = 2;           // constructor nesting above the atoms
};

struct Finding {
  std::string name;       // printable spec
  RingSpec spec;
  Fingerprint fp;
  std::map<std::string, bool> flags;  // values of the predicate's flags
};

struct SearchResult {
  std::vector<Finding> findings;
  long examined = 0;
  bool partial = false;  // instance budget ran out before the space did
};

// Enumerates ring specs (zmod, gf, matrix, uppertri, product, opposite)
// by increasing order, classifies each, and keeps those satisfying the
// predicate. Deterministic for fixed config and budgets.
SearchResult search_counterexamples(const Predicate& pred,
                                    const SearchConfig& cfg,
                                    const Budgets& b);

// One <fingerprint>_<ordinal>.ring (statement + tables file) and one
// matching .report JSON per finding.
void persist_findings(const SearchResult& res, const std::string& dir);

}  // namespace ringlab

#endif  // RINGLAB_SEARCH_HPP_
