#ifndef RINGLAB_CATALOG_HPP_
#define RINGLAB_CATALOG_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/module.hpp"
#include "ringlab/ringspec.hpp"

namespace ringlab {

struct RingInstance {
  std::string name;
  std::shared_ptr<const FinRing> ring;
  std::optional<RingDef> def;  // absent for raw-table members
};

struct ModuleInstance {
  std::string name;
  std::string ring_name;
  std::shared_ptr<const FinModule> mod;
  std::optional<ModuleDef> def;  // absent for derived regular modules
};

// An explicit embedding R -> Q used by the embedding claims; `inj` maps
// R-indices to Q-indices and is checked to be an injective unital ring
// homomorphism (star-compatible when star_pair).
struct EmbeddingPair {
  std::string name;
  std::shared_ptr<const FinRing> r;
  std::shared_ptr<const FinRing> q;
  std::vector<Idx> inj;
  bool star_pair = false;
};

struct Catalog {
  std::vector<RingInstance> rings;
  std::vector<ModuleInstance> modules;
  std::vector<EmbeddingPair> pairs;
  // Pairs of instance names with equal fingerprints (flagged, never
  // dropped).
  std::vector<std::pair<std::string, std::string>> fingerprint_duplicates;
};

// Rings with order at most this bound contribute their regular module to
// the module suite.
inline constexpr int kRegularModuleOrderCap = 100;

Catalog builtin_catalog(const Budgets& b);

// One .ring file per ring (DSL statement; raw members get a .tables file
// next to it) and one .module file per explicit module. Embedding pairs
// are builtin-only and not serialized.
void save_catalog(const Catalog& cat, const std::string& dir);
Catalog load_catalog(const std::string& dir, const Budgets& b);

// Loads rings/modules from a single DSL text (used by --inline).
Catalog catalog_from_program(const std::string& text, const Budgets& b,
                             const std::string& base_dir = "");

std::string catalog_digest(const Catalog& cat);

// Flags every pair of instances with equal fingerprints.
void flag_fingerprint_duplicates(Catalog& cat);

}  // namespace ringlab

#endif  // RINGLAB_CATALOG_HPP_
