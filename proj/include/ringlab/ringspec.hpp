#ifndef RINGLAB_RINGSPEC_HPP_
#define RINGLAB_RINGSPEC_HPP_

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ringlab/budgets.hpp"
#include "ringlab/finring.hpp"

namespace ringlab {

enum class StarKind { None, Identity, Transpose, Swap };

// Constructor expression for a finite ring. `star` is only meaningful on
// the root of a definition.
struct RingSpec {
  enum class Kind { Zmod, Gf, Matrix, UpperTri, Product, Opposite, Raw, Ref };

  Kind kind = Kind::Zmod;
  long p = 0;                  // zmod modulus / gf characteristic
  long k = 1;                  // gf degree / matrix dimension
  std::vector<RingSpec> args;  // children for matrix/uppertri/product/opposite
  std::string name;            // raw file path or referenced ring name
  StarKind star = StarKind::None;

  bool operator==(const RingSpec&) const = default;

  static RingSpec zmod(long n);
  static RingSpec gf(long p, long k = 1);
  static RingSpec matrix(RingSpec base, long k);
  static RingSpec uppertri(RingSpec base, long k);
  static RingSpec product(RingSpec a, RingSpec b);
  static RingSpec opposite(RingSpec a);
  static RingSpec raw(std::string path);
  static RingSpec ref(std::string name);

  RingSpec with_involution(StarKind kind) const;
};

// Constructor expression for a finite right module over a named ring.
struct ModuleSpec {
  enum class Kind { Free, Cyclic, Sum, Ref };

  Kind kind = Kind::Free;
  long k = 1;                    // free rank
  std::vector<Idx> generators;   // cyclic: ideal generators
  std::vector<ModuleSpec> args;  // sum components
  std::string name;              // referenced module name

  bool operator==(const ModuleSpec&) const = default;
};

struct RingDef {
  std::string name;
  RingSpec spec;
};

struct ModuleDef {
  std::string name;
  std::string ring;
  ModuleSpec spec;
};

struct Program {
  std::vector<std::variant<RingDef, ModuleDef>> statements;
};

// DSL front end. Statements are newline- or ';'-separated; '#' starts a
// comment. Throws Errc::SyntaxError with line/column, or
// Errc::UnknownConstructor.
Program parse_program(const std::string& text);
// Convenience: text holding exactly one `ring` statement.
RingDef parse_ring_def(const std::string& text);
// Accepts either a bare expression ("zmod(4)") or a full statement.
RingDef parse_ring_def_or_expr(const std::string& text);

std::string print_spec(const RingSpec& spec);
std::string print_module_spec(const ModuleSpec& spec);
std::string print_statement(const RingDef& def);
std::string print_statement(const ModuleDef& def);

struct ConstructCtx {
  Budgets budgets;
  std::string base_dir;  // resolves relative raw() paths
  const std::map<std::string, std::shared_ptr<const FinRing>>* env = nullptr;
};

// Builds and fully validates the ring a spec denotes, involution included.
FinRing construct(const RingSpec& spec, const ConstructCtx& ctx = {});

// Raw operation-table file format: `order n`, `add` with n rows of n
// integers, `mul` likewise, then an optional `star` row of n integers.
RawTables load_raw_tables(const std::string& path);
void save_raw_tables(const FinRing& R, const std::string& path);

// Involution tables used by `with involution ...`; exposed for direct use.
std::vector<Idx> identity_star_table(int order);
std::vector<Idx> matrix_transpose_star_table(long base_order, long k);
std::vector<Idx> uppertri_transpose_star_table(long base_order, long k);
std::vector<Idx> swap_star_table(long half_order);

}  // namespace ringlab

#endif  // RINGLAB_RINGSPEC_HPP_
