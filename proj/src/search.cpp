#include "ringlab/search.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>

#include "json.hpp"

namespace ringlab {

// ---------------------------------------------------------------------------
// Predicate parsing

namespace {

struct PredLexer {
  const std::string& s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }

  std::string ident() {
    skip();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (start == pos)
      fail(Errc::SyntaxError, "predicate: expected a flag name at position " +
                                  std::to_string(start));
    return s.substr(start, pos - start);
  }
};

}  // namespace

Predicate Predicate::parse(const std::string& text) {
  Predicate p;
  p.text_ = text;
  PredLexer lex{text};
  std::set<std::string> used;

  // or := and ('|' and)* ; and := not ('&' not)* ; not := '!' not | atom
  std::function<int()> parse_or, parse_and, parse_not;

  auto add_node = [&](Node n) {
    p.nodes_.push_back(std::move(n));
    return static_cast<int>(p.nodes_.size() - 1);
  };

  parse_not = [&]() -> int {
    if (lex.peek() == '!') {
      ++lex.pos;
      int a = parse_not();
      return add_node({Node::Op::Not, a, -1, ""});
    }
    if (lex.peek() == '(') {
      ++lex.pos;
      int a = parse_or();
      if (lex.peek() != ')')
        fail(Errc::SyntaxError, "predicate: missing ')'");
      ++lex.pos;
      return a;
    }
    std::string name = lex.ident();
    // Accept the uppercase aliases used for the C-conditions.
    std::string canon = name;
    if (name == "CS") canon = "cs";
    if (name == "C1") canon = "c1";
    if (name == "C2") canon = "c2";
    if (name == "C3") canon = "c3";
    const auto& known = RingAnalysis::flag_names();
    if (std::find(known.begin(), known.end(), canon) == known.end()) {
      std::string list;
      for (const std::string& k : known) list += (list.empty() ? "" : ", ") + k;
      fail(Errc::SyntaxError,
           "predicate: unknown flag '" + name + "' (known: " + list + ")");
    }
    used.insert(canon);
    return add_node({Node::Op::Flag, -1, -1, canon});
  };
  parse_and = [&]() -> int {
    int a = parse_not();
    while (lex.peek() == '&') {
      ++lex.pos;
      int b = parse_not();
      a = add_node({Node::Op::And, a, b, ""});
    }
    return a;
  };
  parse_or = [&]() -> int {
    int a = parse_and();
    while (lex.peek() == '|') {
      ++lex.pos;
      int b = parse_and();
      a = add_node({Node::Op::Or, a, b, ""});
    }
    return a;
  };

  p.root_ = parse_or();
  if (lex.peek() != '\0')
    fail(Errc::SyntaxError, "predicate: trailing input at position " +
                                std::to_string(lex.pos));
  p.flags_.assign(used.begin(), used.end());
  return p;
}

bool Predicate::eval_node(int idx, RingAnalysis& a) const {
  const Node& n = nodes_[idx];
  switch (n.op) {
    case Node::Op::Flag: return a.flag(n.flag);
    case Node::Op::Not: return !eval_node(n.a, a);
    case Node::Op::And: return eval_node(n.a, a) && eval_node(n.b, a);
    case Node::Op::Or: return eval_node(n.a, a) || eval_node(n.b, a);
  }
  return false;
}

bool Predicate::eval(RingAnalysis& a) const { return eval_node(root_, a); }

// ---------------------------------------------------------------------------
// Spec enumeration

namespace {

std::vector<long> primes_upto(long n) {
  std::vector<long> ps;
  for (long p = 2; p <= n; ++p) {
    bool prime = true;
    for (long d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (prime) ps.push_back(p);
  }
  return ps;
}

long spec_order(const RingSpec& s) {
  auto pw = [](long b, long e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
  };
  switch (s.kind) {
    case RingSpec::Kind::Zmod: return s.p;
    case RingSpec::Kind::Gf: return pw(s.p, s.k);
    case RingSpec::Kind::Matrix:
      return pw(spec_order(s.args[0]), s.k * s.k);
    case RingSpec::Kind::UpperTri:
      return pw(spec_order(s.args[0]), s.k * (s.k + 1) / 2);
    case RingSpec::Kind::Product:
      return spec_order(s.args[0]) * spec_order(s.args[1]);
    case RingSpec::Kind::Opposite: return spec_order(s.args[0]);
    default: return 0;
  }
}

// All candidate specs with order <= max_order, by nesting depth.
std::vector<RingSpec> enumerate_specs(const SearchConfig& cfg) {
  std::vector<RingSpec> atoms;
  for (long n = 2; n <= cfg.max_order; ++n) atoms.push_back(RingSpec::zmod(n));
  for (long p : primes_upto(cfg.max_order))
    for (long k = 2; ; ++k) {
      long ord = 1;
      bool fits = true;
      for (long i = 0; i < k && fits; ++i) {
        ord *= p;
        fits = ord <= cfg.max_order;
      }
      if (!fits) break;
      atoms.push_back(RingSpec::gf(p, k));
    }

  std::vector<RingSpec> out = atoms;
  std::vector<RingSpec> layer = atoms;
  for (int depth = 1; depth <= cfg.max_depth; ++depth) {
    std::vector<RingSpec> next;
    auto fits = [&](const RingSpec& s) { return spec_order(s) <= cfg.max_order; };
    for (const RingSpec& base : layer) {
      for (long k = 2;; ++k) {
        RingSpec m = RingSpec::matrix(base, k);
        if (!fits(m)) break;
        next.push_back(m);
      }
      for (long k = 2;; ++k) {
        RingSpec u = RingSpec::uppertri(base, k);
        if (!fits(u)) break;
        next.push_back(u);
      }
      // The opposite of a matrix or triangular ring can differ; atoms are
      // commutative so their opposite adds nothing.
      if (base.kind == RingSpec::Kind::Matrix ||
          base.kind == RingSpec::Kind::UpperTri)
        next.push_back(RingSpec::opposite(base));
    }
    // Products of everything seen so far, unordered (the two orders are
    // isomorphic).
    if (depth == 1) {
      for (size_t i = 0; i < atoms.size(); ++i)
        for (size_t j = i; j < atoms.size(); ++j) {
          RingSpec pr = RingSpec::product(atoms[i], atoms[j]);
          if (fits(pr)) next.push_back(pr);
        }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }

  std::stable_sort(out.begin(), out.end(),
                   [](const RingSpec& a, const RingSpec& b) {
                     long oa = spec_order(a), ob = spec_order(b);
                     if (oa != ob) return oa < ob;
                     return print_spec(a) < print_spec(b);
                   });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const RingSpec& a, const RingSpec& b) {
                          return print_spec(a) == print_spec(b);
                        }),
            out.end());
  return out;
}

}  // namespace

SearchResult search_counterexamples(const Predicate& pred,
                                    const SearchConfig& cfg,
                                    const Budgets& b) {
  SearchResult res;
  std::vector<RingSpec> specs = enumerate_specs(cfg);
  for (const RingSpec& spec : specs) {
    if (res.examined >= cfg.max_instances) {
      res.partial = true;
      break;
    }
    ++res.examined;
    ConstructCtx ctx;
    ctx.budgets = b;
    auto ring = std::make_shared<FinRing>(construct(spec, ctx));
    RingAnalysis a(print_spec(spec), ring, b);
    bool hit;
    try {
      hit = pred.eval(a);
    } catch (const Error& e) {
      if (e.code() == Errc::BudgetExceeded) continue;  // too big to classify
      throw;
    }
    if (!hit) continue;
    Finding f;
    f.name = print_spec(spec);
    f.spec = spec;
    f.fp = fingerprint(*ring);
    for (const std::string& flag : pred.flags()) f.flags[flag] = a.flag(flag);
    res.findings.push_back(std::move(f));
  }
  return res;
}

void persist_findings(const SearchResult& res, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  int ordinal = 0;
  for (const Finding& f : res.findings) {
    std::string stem = f.fp.hash_token() + "_" + std::to_string(ordinal++);
    {
      std::ofstream out(dir + "/" + stem + ".ring");
      if (!out) fail(Errc::IoError, "cannot write finding " + stem);
      out << print_statement(RingDef{"found_" + std::to_string(ordinal - 1),
                                     f.spec})
          << "\n";
    }
    nlohmann::ordered_json j;
    j["spec"] = f.name;
    j["fingerprint"] = f.fp.to_string();
    nlohmann::ordered_json flags;
    for (const auto& [k, v] : f.flags) flags[k] = v;
    j["flags"] = flags;
    std::ofstream rep(dir + "/" + stem + ".report");
    if (!rep) fail(Errc::IoError, "cannot write report " + stem);
    rep << j.dump(2) << "\n";
  }
}

}  // namespace ringlab
