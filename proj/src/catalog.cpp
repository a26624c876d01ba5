#include "ringlab/catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace ringlab {

namespace {

namespace fs = std::filesystem;

std::shared_ptr<const FinRing> make_ring(const RingSpec& spec,
                                         const Budgets& b) {
  ConstructCtx ctx;
  ctx.budgets = b;
  return std::make_shared<FinRing>(construct(spec, ctx));
}

// GF(2)[x]/(x^2): the four elements a + bx indexed by a + 2b. A local ring
// whose maximal ideal (x) is not generated by an idempotent.
FinRing dual_numbers_gf2() {
  RawTables t;
  t.order = 4;
  t.add.resize(16);
  t.mul.resize(16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int a1 = i & 1, b1 = i >> 1, a2 = j & 1, b2 = j >> 1;
      t.add[i * 4 + j] = ((a1 + a2) & 1) + 2 * ((b1 + b2) & 1);
      t.mul[i * 4 + j] = (a1 & a2) + 2 * ((a1 & b2) ^ (b1 & a2));
    }
  return FinRing::validate(std::move(t), "gf(2)[x]/(x^2)");
}

void check_embedding(const EmbeddingPair& p) {
  const FinRing& R = *p.r;
  const FinRing& Q = *p.q;
  if (p.inj.size() != static_cast<size_t>(R.order()))
    fail(Errc::InternalCheck, p.name + ": embedding table size mismatch");
  std::vector<bool> hit(Q.order(), false);
  for (Idx a = 0; a < R.order(); ++a) {
    Idx v = p.inj[a];
    if (v < 0 || v >= Q.order() || hit[v])
      fail(Errc::InternalCheck, p.name + ": embedding not injective");
    hit[v] = true;
  }
  if (p.inj[R.one()] != Q.one())
    fail(Errc::InternalCheck, p.name + ": embedding does not fix 1");
  for (Idx a = 0; a < R.order(); ++a)
    for (Idx b = 0; b < R.order(); ++b) {
      if (p.inj[R.add(a, b)] != Q.add(p.inj[a], p.inj[b]))
        fail(Errc::InternalCheck, p.name + ": embedding not additive");
      if (p.inj[R.mul(a, b)] != Q.mul(p.inj[a], p.inj[b]))
        fail(Errc::InternalCheck, p.name + ": embedding not multiplicative");
    }
  if (p.star_pair) {
    if (!R.has_star() || !Q.has_star())
      fail(Errc::InternalCheck, p.name + ": star pair without involutions");
    for (Idx a = 0; a < R.order(); ++a)
      if (p.inj[R.star(a)] != Q.star(p.inj[a]))
        fail(Errc::InternalCheck, p.name + ": embedding not star-compatible");
  }
}

std::string sanitize(const std::string& name) {
  std::string out;
  for (char c : name)
    out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  if (out.empty() || std::isdigit(static_cast<unsigned char>(out[0])))
    out = "r_" + out;
  return out;
}

}  // namespace

Catalog builtin_catalog(const Budgets& b) {
  Catalog cat;
  auto add_spec = [&](const RingSpec& spec) {
    RingInstance inst;
    inst.def = RingDef{sanitize(print_spec(spec)), spec};
    inst.name = print_spec(spec);
    if (spec.star == StarKind::Identity) inst.name += " with involution identity";
    if (spec.star == StarKind::Transpose)
      inst.name += " with involution transpose";
    if (spec.star == StarKind::Swap) inst.name += " with involution swap";
    inst.def->name = sanitize(inst.name);
    inst.ring = make_ring(spec, b);
    cat.rings.push_back(std::move(inst));
  };

  for (long n = 1; n <= 12; ++n) add_spec(RingSpec::zmod(n));
  add_spec(RingSpec::gf(2));
  add_spec(RingSpec::gf(3));
  add_spec(RingSpec::gf(2, 2));
  add_spec(RingSpec::matrix(RingSpec::gf(2), 2));
  add_spec(RingSpec::matrix(RingSpec::gf(3), 2));
  add_spec(RingSpec::uppertri(RingSpec::gf(2), 2));
  add_spec(RingSpec::uppertri(RingSpec::gf(3), 2));
  add_spec(RingSpec::uppertri(RingSpec::uppertri(RingSpec::gf(2), 2), 2));
  add_spec(RingSpec::product(RingSpec::zmod(4), RingSpec::gf(2)));
  add_spec(RingSpec::product(RingSpec::gf(2), RingSpec::gf(3)));
  {
    RingInstance inst;
    inst.name = "gf(2)[x]/(x^2)";
    inst.ring = std::make_shared<FinRing>(dual_numbers_gf2());
    cat.rings.push_back(std::move(inst));
  }
  // Involutive members.
  add_spec(RingSpec::zmod(4).with_involution(StarKind::Identity));
  add_spec(RingSpec::zmod(6).with_involution(StarKind::Identity));
  add_spec(
      RingSpec::matrix(RingSpec::gf(3), 2).with_involution(StarKind::Transpose));
  add_spec(RingSpec::product(RingSpec::gf(2), RingSpec::gf(2))
               .with_involution(StarKind::Swap));

  // Module members: the regular module of every small ring without an
  // involution (star members would only repeat them), plus explicit ones.
  for (const RingInstance& ri : cat.rings) {
    if (ri.ring->order() > kRegularModuleOrderCap || ri.ring->has_star())
      continue;
    ModuleInstance mi;
    mi.name = ri.name + " regular";
    mi.ring_name = ri.name;
    mi.mod = std::make_shared<FinModule>(regular_module(ri.ring));
    cat.modules.push_back(std::move(mi));
  }
  auto add_module = [&](const std::string& ring_name, ModuleSpec spec) {
    auto it =
        std::find_if(cat.rings.begin(), cat.rings.end(),
                     [&](const RingInstance& r) { return r.name == ring_name; });
    if (it == cat.rings.end())
      fail(Errc::InternalCheck, "builtin module over unknown ring");
    ModuleInstance mi;
    mi.name = print_module_spec(spec) + " over " + ring_name;
    mi.ring_name = ring_name;
    mi.def = ModuleDef{sanitize(mi.name), it->def ? it->def->name : ring_name,
                       spec};
    mi.mod = std::make_shared<FinModule>(build_module(it->ring, spec, b));
    cat.modules.push_back(std::move(mi));
  };
  {
    ModuleSpec free2;
    free2.kind = ModuleSpec::Kind::Free;
    free2.k = 2;
    add_module("gf(2)", free2);
    ModuleSpec cyc;
    cyc.kind = ModuleSpec::Kind::Cyclic;
    cyc.generators = {2};
    add_module("zmod(4)", cyc);
    // The quotient of uppertri(gf(2), 2) by its socle-like ideal
    // {(0,b,d)}: a singular module paired with the nonsingular regular
    // module in the hom tests.
    ModuleSpec soc;
    soc.kind = ModuleSpec::Kind::Cyclic;
    soc.generators = {1, 2};
    add_module("uppertri(gf(2), 2)", soc);
  }

  // Embedding pairs for the embedding claims.
  auto find_ring = [&](const std::string& name) {
    for (const RingInstance& r : cat.rings)
      if (r.name == name) return r.ring;
    fail(Errc::InternalCheck, "builtin pair over unknown ring " + name);
  };
  auto add_pair = [&](std::string name, std::shared_ptr<const FinRing> r,
                      std::shared_ptr<const FinRing> q, std::vector<Idx> inj,
                      bool star) {
    EmbeddingPair p{std::move(name), std::move(r), std::move(q),
                    std::move(inj), star};
    check_embedding(p);
    cat.pairs.push_back(std::move(p));
  };
  {
    // Prime field inside its quadratic extension; scalars keep their index.
    std::vector<Idx> id2 = {0, 1};
    add_pair("zmod(2) in gf(4)", find_ring("zmod(2)"), find_ring("gf(2, 2)"),
             id2, false);
    auto gf9 = make_ring(RingSpec::gf(3, 2), b);
    add_pair("zmod(3) in gf(9)", find_ring("zmod(3)"), gf9, {0, 1, 2}, false);
    add_pair("zmod(4) in zmod(4)", find_ring("zmod(4)"), find_ring("zmod(4)"),
             {0, 1, 2, 3}, false);
    // (a,b,d) upper triangular into the full 2x2 matrix ring.
    std::vector<Idx> tri(8);
    for (Idx a = 0; a < 2; ++a)
      for (Idx bb = 0; bb < 2; ++bb)
        for (Idx d = 0; d < 2; ++d) tri[a * 4 + bb * 2 + d] = a * 8 + bb * 4 + d;
    add_pair("uppertri(gf(2), 2) in matrix(gf(2), 2)",
             find_ring("uppertri(gf(2), 2)"), find_ring("matrix(gf(2), 2)"),
             tri, false);
    add_pair("gf(2) in matrix(gf(2), 2)", find_ring("gf(2)"),
             find_ring("matrix(gf(2), 2)"), {0, 9}, false);
    // Star pairs.
    auto z2_star =
        make_ring(RingSpec::zmod(2).with_involution(StarKind::Identity), b);
    auto gf4_star =
        make_ring(RingSpec::gf(2, 2).with_involution(StarKind::Identity), b);
    add_pair("zmod(2) in gf(4) with identity involution", z2_star, gf4_star,
             {0, 1}, true);
    auto z6_star = find_ring("zmod(6) with involution identity");
    add_pair("zmod(6) in zmod(6) with identity involution", z6_star, z6_star,
             {0, 1, 2, 3, 4, 5}, true);
    auto swap_ring =
        find_ring("product(gf(2), gf(2)) with involution swap");
    add_pair("product(gf(2), gf(2)) with swap in itself", swap_ring, swap_ring,
             {0, 1, 2, 3}, true);
  }

  flag_fingerprint_duplicates(cat);
  return cat;
}

void flag_fingerprint_duplicates(Catalog& cat) {
  cat.fingerprint_duplicates.clear();
  std::map<std::string, std::vector<std::string>> groups;
  for (const RingInstance& r : cat.rings)
    groups[fingerprint(*r.ring).hash_token()].push_back(r.name);
  for (auto& [token, names] : groups)
    for (size_t i = 1; i < names.size(); ++i)
      cat.fingerprint_duplicates.emplace_back(names[0], names[i]);
}

void save_catalog(const Catalog& cat, const std::string& dir) {
  fs::create_directories(dir);
  int idx = 0;
  for (const RingInstance& r : cat.rings) {
    std::ostringstream base;
    base << (idx < 10 ? "0" : "") << idx << "_"
         << sanitize(r.name);
    ++idx;
    std::string path = dir + "/" + base.str() + ".ring";
    std::ofstream out(path);
    if (!out) fail(Errc::IoError, "cannot write '" + path + "'");
    if (r.def) {
      out << print_statement(*r.def) << "\n";
    } else {
      std::string tables = base.str() + ".tables";
      save_raw_tables(*r.ring, dir + "/" + tables);
      RingDef def{sanitize(r.name), RingSpec::raw(tables)};
      out << print_statement(def) << "\n";
    }
  }
  for (const ModuleInstance& m : cat.modules) {
    if (!m.def) continue;  // regular modules are regenerated on load
    std::ostringstream base;
    base << (idx < 10 ? "0" : "") << idx << "_" << sanitize(m.name);
    ++idx;
    std::string path = dir + "/" + base.str() + ".module";
    std::ofstream out(path);
    if (!out) fail(Errc::IoError, "cannot write '" + path + "'");
    out << print_statement(*m.def) << "\n";
  }
}

namespace {

void eval_program_into(Catalog& cat, const Program& prog, const Budgets& b,
                       const std::string& base_dir,
                       std::map<std::string, std::shared_ptr<const FinRing>>&
                           ring_env,
                       std::map<std::string, std::shared_ptr<const FinModule>>&
                           module_env) {
  for (const auto& stmt : prog.statements) {
    if (std::holds_alternative<RingDef>(stmt)) {
      const RingDef& def = std::get<RingDef>(stmt);
      ConstructCtx ctx;
      ctx.budgets = b;
      ctx.base_dir = base_dir;
      ctx.env = &ring_env;
      auto ring = std::make_shared<FinRing>(construct(def.spec, ctx));
      ring_env[def.name] = ring;
      cat.rings.push_back(RingInstance{def.name, ring, def});
    } else {
      const ModuleDef& def = std::get<ModuleDef>(stmt);
      auto it = ring_env.find(def.ring);
      if (it == ring_env.end())
        fail(Errc::UnknownConstructor,
             "module '" + def.name + "' over undefined ring '" + def.ring +
                 "'");
      auto mod = std::make_shared<FinModule>(
          build_module(it->second, def.spec, b, &module_env));
      module_env[def.name] = mod;
      cat.modules.push_back(ModuleInstance{def.name, def.ring, mod, def});
    }
  }
}

}  // namespace

Catalog load_catalog(const std::string& dir, const Budgets& b) {
  if (!fs::is_directory(dir))
    fail(Errc::IoError, "catalog directory '" + dir + "' does not exist");
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::string ext = entry.path().extension().string();
    if (ext == ".ring" || ext == ".module")
      files.push_back(entry.path().string());
  }
  std::sort(files.begin(), files.end());

  Catalog cat;
  std::map<std::string, std::shared_ptr<const FinRing>> ring_env;
  std::map<std::string, std::shared_ptr<const FinModule>> module_env;
  for (const std::string& path : files) {
    std::ifstream in(path);
    if (!in) fail(Errc::IoError, "cannot open '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    Program prog;
    try {
      prog = parse_program(text.str());
    } catch (const Error& e) {
      fail(e.code(), path + ": " + e.what());
    }
    try {
      eval_program_into(cat, prog, b, dir, ring_env, module_env);
    } catch (const Error& e) {
      if (e.code() == Errc::BudgetExceeded ||
          e.code() == Errc::SizeBudgetExceeded)
        throw;
      fail(e.code(), path + ": " + e.what());
    }
  }
  // Derived regular modules, as in the builtin set.
  for (const RingInstance& ri : cat.rings) {
    if (ri.ring->order() > kRegularModuleOrderCap || ri.ring->has_star())
      continue;
    ModuleInstance mi;
    mi.name = ri.name + " regular";
    mi.ring_name = ri.name;
    mi.mod = std::make_shared<FinModule>(regular_module(ri.ring));
    cat.modules.push_back(std::move(mi));
  }
  flag_fingerprint_duplicates(cat);
  return cat;
}

Catalog catalog_from_program(const std::string& text, const Budgets& b,
                             const std::string& base_dir) {
  Catalog cat;
  std::map<std::string, std::shared_ptr<const FinRing>> ring_env;
  std::map<std::string, std::shared_ptr<const FinModule>> module_env;
  eval_program_into(cat, parse_program(text), b, base_dir, ring_env,
                    module_env);
  flag_fingerprint_duplicates(cat);
  return cat;
}

std::string catalog_digest(const Catalog& cat) {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&](const std::string& s) {
    for (char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  };
  for (const RingInstance& r : cat.rings) {
    mix(r.name);
    mix(fingerprint(*r.ring).hash_token());
  }
  for (const ModuleInstance& m : cat.modules) {
    mix(m.name);
    mix(std::to_string(m.mod->order()));
  }
  for (const EmbeddingPair& p : cat.pairs) mix(p.name);
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace ringlab
