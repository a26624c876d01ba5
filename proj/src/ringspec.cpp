#include "ringlab/ringspec.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ringlab {

RingSpec RingSpec::zmod(long n) {
  RingSpec s;
  s.kind = Kind::Zmod;
  s.p = n;
  return s;
}

RingSpec RingSpec::gf(long p, long k) {
  RingSpec s;
  s.kind = Kind::Gf;
  s.p = p;
  s.k = k;
  return s;
}

RingSpec RingSpec::matrix(RingSpec base, long k) {
  RingSpec s;
  s.kind = Kind::Matrix;
  s.k = k;
  s.args.push_back(std::move(base));
  return s;
}

RingSpec RingSpec::uppertri(RingSpec base, long k) {
  RingSpec s;
  s.kind = Kind::UpperTri;
  s.k = k;
  s.args.push_back(std::move(base));
  return s;
}

RingSpec RingSpec::product(RingSpec a, RingSpec b) {
  RingSpec s;
  s.kind = Kind::Product;
  s.args.push_back(std::move(a));
  s.args.push_back(std::move(b));
  return s;
}

RingSpec RingSpec::opposite(RingSpec a) {
  RingSpec s;
  s.kind = Kind::Opposite;
  s.args.push_back(std::move(a));
  return s;
}

RingSpec RingSpec::raw(std::string path) {
  RingSpec s;
  s.kind = Kind::Raw;
  s.name = std::move(path);
  return s;
}

RingSpec RingSpec::ref(std::string name) {
  RingSpec s;
  s.kind = Kind::Ref;
  s.name = std::move(name);
  return s;
}

RingSpec RingSpec::with_involution(StarKind kind) const {
  RingSpec s = *this;
  s.star = kind;
  return s;
}

// ---------------------------------------------------------------------------
// Printing

std::string print_spec(const RingSpec& s) {
  std::ostringstream os;
  switch (s.kind) {
    case RingSpec::Kind::Zmod:
      os << "zmod(" << s.p << ")";
      break;
    case RingSpec::Kind::Gf:
      if (s.k > 1)
        os << "gf(" << s.p << ", " << s.k << ")";
      else
        os << "gf(" << s.p << ")";
      break;
    case RingSpec::Kind::Matrix:
      os << "matrix(" << print_spec(s.args[0]) << ", " << s.k << ")";
      break;
    case RingSpec::Kind::UpperTri:
      os << "uppertri(" << print_spec(s.args[0]) << ", " << s.k << ")";
      break;
    case RingSpec::Kind::Product:
      os << "product(" << print_spec(s.args[0]) << ", "
         << print_spec(s.args[1]) << ")";
      break;
    case RingSpec::Kind::Opposite:
      os << "opposite(" << print_spec(s.args[0]) << ")";
      break;
    case RingSpec::Kind::Raw:
      os << "raw(\"" << s.name << "\")";
      break;
    case RingSpec::Kind::Ref:
      os << s.name;
      break;
  }
  return os.str();
}

std::string print_module_spec(const ModuleSpec& s) {
  std::ostringstream os;
  switch (s.kind) {
    case ModuleSpec::Kind::Free:
      os << "free(" << s.k << ")";
      break;
    case ModuleSpec::Kind::Cyclic: {
      os << "cyclic(";
      for (size_t i = 0; i < s.generators.size(); ++i)
        os << (i ? ", " : "") << s.generators[i];
      os << ")";
      break;
    }
    case ModuleSpec::Kind::Sum: {
      os << "sum(";
      for (size_t i = 0; i < s.args.size(); ++i)
        os << (i ? ", " : "") << print_module_spec(s.args[i]);
      os << ")";
      break;
    }
    case ModuleSpec::Kind::Ref:
      os << s.name;
      break;
  }
  return os.str();
}

std::string print_statement(const RingDef& def) {
  std::string out = "ring " + def.name + " = " + print_spec(def.spec);
  switch (def.spec.star) {
    case StarKind::None: break;
    case StarKind::Identity: out += " with involution identity"; break;
    case StarKind::Transpose: out += " with involution transpose"; break;
    case StarKind::Swap: out += " with involution swap"; break;
  }
  return out;
}

std::string print_statement(const ModuleDef& def) {
  return "module " + def.name + " over " + def.ring + " = " +
         print_module_spec(def.spec);
}

// ---------------------------------------------------------------------------
// Lexer / parser

namespace {

struct Token {
  enum class Type { Ident, Int, LParen, RParen, Comma, Equals, String, Semi, End };
  Type type;
  std::string text;
  long value = 0;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : s_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void error(const std::string& msg, const Token& at) const {
    fail(Errc::SyntaxError, "line " + std::to_string(at.line) + ", col " +
                                std::to_string(at.col) + ": " + msg);
  }

 private:
  void advance() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++pos_;
        ++line_;
        col_ = 1;
        // Newlines separate statements exactly like ';'.
        tok_ = {Token::Type::Semi, "\n", 0, line_ - 1, col_};
        return;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
        ++col_;
      } else {
        break;
      }
    }
    if (pos_ >= s_.size()) {
      tok_ = {Token::Type::End, "", 0, line_, col_};
      return;
    }
    int line = line_, col = col_;
    char c = s_[pos_];
    auto single = [&](Token::Type t) {
      ++pos_;
      ++col_;
      tok_ = {t, std::string(1, c), 0, line, col};
    };
    if (c == '(') return single(Token::Type::LParen);
    if (c == ')') return single(Token::Type::RParen);
    if (c == ',') return single(Token::Type::Comma);
    if (c == '=') return single(Token::Type::Equals);
    if (c == ';') return single(Token::Type::Semi);
    if (c == '"') {
      size_t end = s_.find('"', pos_ + 1);
      if (end == std::string::npos)
        fail(Errc::SyntaxError, "line " + std::to_string(line) + ", col " +
                                    std::to_string(col) +
                                    ": unterminated string");
      std::string text = s_.substr(pos_ + 1, end - pos_ - 1);
      col_ += static_cast<int>(end - pos_ + 1);
      pos_ = end + 1;
      tok_ = {Token::Type::String, std::move(text), 0, line, col};
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      std::string text = s_.substr(start, pos_ - start);
      col_ += static_cast<int>(pos_ - start);
      tok_ = {Token::Type::Int, text, std::stol(text), line, col};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '_'))
        ++pos_;
      std::string text = s_.substr(start, pos_ - start);
      col_ += static_cast<int>(pos_ - start);
      tok_ = {Token::Type::Ident, std::move(text), 0, line, col};
      return;
    }
    fail(Errc::SyntaxError, "line " + std::to_string(line) + ", col " +
                                std::to_string(col) +
                                ": unexpected character '" + c + "'");
  }

  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Program program() {
    Program prog;
    for (;;) {
      skip_separators();
      if (lex_.peek().type == Token::Type::End) break;
      prog.statements.push_back(statement());
    }
    return prog;
  }

 private:
  void skip_separators() {
    while (lex_.peek().type == Token::Type::Semi) lex_.next();
  }

  Token expect(Token::Type t, const std::string& what) {
    Token tok = lex_.next();
    if (tok.type != t)
      lex_.error("expected " + what + ", got '" + tok.text + "'", tok);
    return tok;
  }

  std::string ident(const std::string& what) {
    Token tok = expect(Token::Type::Ident, what);
    return tok.text;
  }

  std::variant<RingDef, ModuleDef> statement() {
    Token head = lex_.peek();
    if (head.type != Token::Type::Ident)
      lex_.error("expected 'ring' or 'module'", head);
    if (head.text == "ring") return ring_def();
    if (head.text == "module") return module_def();
    lex_.error("expected 'ring' or 'module', got '" + head.text + "'", head);
  }

  RingDef ring_def() {
    lex_.next();  // 'ring'
    RingDef def;
    def.name = ident("ring name");
    expect(Token::Type::Equals, "'='");
    def.spec = ring_expr();
    if (lex_.peek().type == Token::Type::Ident && lex_.peek().text == "with") {
      lex_.next();
      Token kw = lex_.next();
      if (kw.type != Token::Type::Ident || kw.text != "involution")
        lex_.error("expected 'involution'", kw);
      Token kind = lex_.next();
      if (kind.type != Token::Type::Ident)
        lex_.error("expected involution kind", kind);
      if (kind.text == "identity")
        def.spec.star = StarKind::Identity;
      else if (kind.text == "transpose")
        def.spec.star = StarKind::Transpose;
      else if (kind.text == "swap")
        def.spec.star = StarKind::Swap;
      else
        lex_.error("unknown involution kind '" + kind.text +
                       "' (expected identity, transpose or swap)",
                   kind);
    }
    end_of_statement();
    return def;
  }

  ModuleDef module_def() {
    lex_.next();  // 'module'
    ModuleDef def;
    def.name = ident("module name");
    Token over = lex_.next();
    if (over.type != Token::Type::Ident || over.text != "over")
      lex_.error("expected 'over'", over);
    def.ring = ident("ring name");
    expect(Token::Type::Equals, "'='");
    def.spec = module_expr();
    end_of_statement();
    return def;
  }

  void end_of_statement() {
    Token t = lex_.peek();
    if (t.type == Token::Type::Semi)
      lex_.next();
    else if (t.type != Token::Type::End)
      lex_.error("expected end of statement, got '" + t.text + "'", t);
  }

  long int_arg(const std::string& what) {
    Token t = expect(Token::Type::Int, what);
    return t.value;
  }

  RingSpec ring_expr() {
    Token head = lex_.next();
    if (head.type != Token::Type::Ident)
      lex_.error("expected ring expression, got '" + head.text + "'", head);
    if (lex_.peek().type != Token::Type::LParen) {
      // Bare identifier: reference to a previously defined ring.
      return RingSpec::ref(head.text);
    }
    lex_.next();  // '('
    RingSpec out;
    if (head.text == "zmod") {
      out = RingSpec::zmod(int_arg("modulus"));
    } else if (head.text == "gf") {
      long p = int_arg("characteristic");
      long k = 1;
      if (lex_.peek().type == Token::Type::Comma) {
        lex_.next();
        k = int_arg("degree");
      }
      out = RingSpec::gf(p, k);
    } else if (head.text == "matrix" || head.text == "uppertri") {
      RingSpec base = ring_expr();
      expect(Token::Type::Comma, "','");
      long k = int_arg("dimension");
      out = head.text == "matrix" ? RingSpec::matrix(std::move(base), k)
                                  : RingSpec::uppertri(std::move(base), k);
    } else if (head.text == "product") {
      RingSpec a = ring_expr();
      expect(Token::Type::Comma, "','");
      RingSpec b = ring_expr();
      out = RingSpec::product(std::move(a), std::move(b));
    } else if (head.text == "opposite") {
      out = RingSpec::opposite(ring_expr());
    } else if (head.text == "raw") {
      Token path = expect(Token::Type::String, "quoted file path");
      out = RingSpec::raw(path.text);
    } else {
      fail(Errc::UnknownConstructor,
           "line " + std::to_string(head.line) + ": '" + head.text + "'");
    }
    expect(Token::Type::RParen, "')'");
    return out;
  }

  ModuleSpec module_expr() {
    Token head = lex_.next();
    if (head.type != Token::Type::Ident)
      lex_.error("expected module expression, got '" + head.text + "'", head);
    if (lex_.peek().type != Token::Type::LParen) {
      ModuleSpec out;
      out.kind = ModuleSpec::Kind::Ref;
      out.name = head.text;
      return out;
    }
    lex_.next();  // '('
    ModuleSpec out;
    if (head.text == "free") {
      out.kind = ModuleSpec::Kind::Free;
      out.k = int_arg("rank");
    } else if (head.text == "cyclic") {
      out.kind = ModuleSpec::Kind::Cyclic;
      out.generators.push_back(static_cast<Idx>(int_arg("generator index")));
      while (lex_.peek().type == Token::Type::Comma) {
        lex_.next();
        out.generators.push_back(static_cast<Idx>(int_arg("generator index")));
      }
    } else if (head.text == "sum") {
      out.kind = ModuleSpec::Kind::Sum;
      out.args.push_back(module_expr());
      while (lex_.peek().type == Token::Type::Comma) {
        lex_.next();
        out.args.push_back(module_expr());
      }
    } else {
      fail(Errc::UnknownConstructor,
           "line " + std::to_string(head.line) + ": '" + head.text + "'");
    }
    expect(Token::Type::RParen, "')'");
    return out;
  }

  Lexer lex_;
};

}  // namespace

Program parse_program(const std::string& text) {
  return Parser(text).program();
}

RingDef parse_ring_def(const std::string& text) {
  Program prog = parse_program(text);
  if (prog.statements.size() != 1 ||
      !std::holds_alternative<RingDef>(prog.statements[0]))
    fail(Errc::SyntaxError, "expected exactly one ring statement");
  return std::get<RingDef>(prog.statements[0]);
}

RingDef parse_ring_def_or_expr(const std::string& text) {
  size_t i = text.find_first_not_of(" \t\n");
  if (i != std::string::npos && text.compare(i, 5, "ring ") == 0)
    return parse_ring_def(text);
  return parse_ring_def("ring R = " + text);
}

// ---------------------------------------------------------------------------
// Construction

namespace {

long checked_pow(long base, long exp, long cap, const std::string& what) {
  long r = 1;
  for (long i = 0; i < exp; ++i) {
    if (r > cap / base)
      fail(Errc::SizeBudgetExceeded,
           what + " exceeds the order cap of " + std::to_string(cap));
    r *= base;
  }
  return r;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over GF(p), coefficient vector with c[i] the x^i coefficient.
using Poly = std::vector<int>;

Poly poly_mod(Poly a, const Poly& m, long p) {
  // m monic of degree d.
  const int d = static_cast<int>(m.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= d; --i) {
    int c = a[i];
    if (c == 0) continue;
    for (int j = 0; j <= d; ++j) {
      int& t = a[i - d + j];
      t = static_cast<int>(((t - static_cast<long>(c) * m[j]) % p + p) % p);
    }
  }
  a.resize(d);
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, long p) {
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<int>(
          (c[i + j] + static_cast<long>(a[i]) * b[j]) % p);
  return poly_mod(std::move(c), m, p);
}

bool poly_divides(const Poly& g, Poly f, long p) {
  // g monic; true iff g | f.
  f = poly_mod(std::move(f), g, p);
  for (int c : f)
    if (c) return false;
  return true;
}

// Monic degree-k polynomial with the smallest coefficient tuple (read from
// the x^{k-1} coefficient down) that has no monic divisor of degree
// 1..k/2. Exhaustive, so no lookup table is needed.
Poly smallest_irreducible(long p, long k) {
  long total = checked_pow(p, k, 1L << 30, "gf coefficient space");
  for (long code = 0; code < total; ++code) {
    Poly f(k + 1, 0);
    long c = code;
    for (long i = 0; i < k; ++i) {
      f[i] = static_cast<int>(c % p);
      c /= p;
    }
    f[k] = 1;
    if (k >= 2 && f[0] == 0) continue;  // divisible by x
    bool irred = true;
    for (long d = 1; irred && 2 * d <= k; ++d) {
      long divisors = checked_pow(p, d, 1L << 30, "divisor space");
      for (long gc = 0; gc < divisors && irred; ++gc) {
        Poly g(d + 1, 0);
        long t = gc;
        for (long i = 0; i < d; ++i) {
          g[i] = static_cast<int>(t % p);
          t /= p;
        }
        g[d] = 1;
        if (poly_divides(g, f, p)) irred = false;
      }
    }
    if (irred) return f;
  }
  fail(Errc::InternalCheck, "no irreducible polynomial found");
}

FinRing build_zmod(long n, const std::string& label) {
  const int N = static_cast<int>(n);
  RawTables t;
  t.order = N;
  t.add.resize(static_cast<size_t>(N) * N);
  t.mul.resize(static_cast<size_t>(N) * N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      t.add[static_cast<size_t>(a) * N + b] = (a + b) % N;
      t.mul[static_cast<size_t>(a) * N + b] =
          static_cast<Idx>((static_cast<long>(a) * b) % N);
    }
  return FinRing::validate(std::move(t), label);
}

FinRing build_gf(long p, long k, const std::string& label) {
  if (!is_prime(p))
    fail(Errc::NonPrimeCharacteristic,
         "gf(" + std::to_string(p) + ", " + std::to_string(k) +
             "): " + std::to_string(p) + " is not prime");
  if (k < 1) fail(Errc::InvalidArgument, "gf degree must be >= 1");
  if (k == 1) return build_zmod(p, label);
  long n = 1;
  for (long i = 0; i < k; ++i) n *= p;
  Poly m = smallest_irreducible(p, k);
  const int N = static_cast<int>(n);
  auto decode = [&](long idx) {
    Poly f(k, 0);
    for (long i = 0; i < k; ++i) {
      f[i] = static_cast<int>(idx % p);
      idx /= p;
    }
    return f;
  };
  auto encode = [&](const Poly& f) {
    long idx = 0;
    for (long i = k - 1; i >= 0; --i) idx = idx * p + f[i];
    return static_cast<Idx>(idx);
  };
  RawTables t;
  t.order = N;
  t.add.resize(static_cast<size_t>(N) * N);
  t.mul.resize(static_cast<size_t>(N) * N);
  for (int a = 0; a < N; ++a) {
    Poly fa = decode(a);
    for (int b = 0; b < N; ++b) {
      Poly fb = decode(b);
      Poly sum(k, 0);
      for (long i = 0; i < k; ++i)
        sum[i] = static_cast<int>((fa[i] + fb[i]) % p);
      t.add[static_cast<size_t>(a) * N + b] = encode(sum);
      t.mul[static_cast<size_t>(a) * N + b] = encode(poly_mulmod(fa, fb, m, p));
    }
  }
  return FinRing::validate(std::move(t), label);
}

// Index codecs. Digit tuples map to indices with the first-listed digit most
// significant, matching the left-major product ordering.
struct DigitCodec {
  long base;
  int digits;

  std::vector<int> decode(long idx) const {
    std::vector<int> d(digits);
    for (int i = digits - 1; i >= 0; --i) {
      d[i] = static_cast<int>(idx % base);
      idx /= base;
    }
    return d;
  }

  Idx encode(const std::vector<int>& d) const {
    long idx = 0;
    for (int i = 0; i < digits; ++i) idx = idx * base + d[i];
    return static_cast<Idx>(idx);
  }
};

FinRing build_matrix(const FinRing& base, long k, long cap,
                     const std::string& label) {
  if (k < 1) fail(Errc::InvalidArgument, "matrix dimension must be >= 1");
  long n = checked_pow(base.order(), k * k, cap, label);
  DigitCodec codec{base.order(), static_cast<int>(k * k)};
  const int N = static_cast<int>(n);
  RawTables t;
  t.order = N;
  t.add.resize(static_cast<size_t>(N) * N);
  t.mul.resize(static_cast<size_t>(N) * N);
  std::vector<std::vector<int>> mats(N);
  for (int a = 0; a < N; ++a) mats[a] = codec.decode(a);
  std::vector<int> out(k * k);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      const auto& A = mats[a];
      const auto& B = mats[b];
      for (long r = 0; r < k; ++r)
        for (long c = 0; c < k; ++c) {
          Idx acc = base.zero();
          for (long j = 0; j < k; ++j)
            acc = base.add(acc, base.mul(A[r * k + j], B[j * k + c]));
          out[r * k + c] = acc;
        }
      t.mul[static_cast<size_t>(a) * N + b] = codec.encode(out);
      for (long i = 0; i < k * k; ++i) out[i] = base.add(A[i], B[i]);
      t.add[static_cast<size_t>(a) * N + b] = codec.encode(out);
    }
  return FinRing::validate(std::move(t), label);
}

// Slot list for the upper triangle, row-major: (0,0),(0,1),..,(1,1),..
std::vector<std::pair<int, int>> upper_slots(long k) {
  std::vector<std::pair<int, int>> slots;
  for (int r = 0; r < k; ++r)
    for (int c = r; c < k; ++c) slots.emplace_back(r, c);
  return slots;
}

FinRing build_uppertri(const FinRing& base, long k, long cap,
                       const std::string& label) {
  if (k < 1) fail(Errc::InvalidArgument, "uppertri dimension must be >= 1");
  auto slots = upper_slots(k);
  const int t_count = static_cast<int>(slots.size());
  long n = checked_pow(base.order(), t_count, cap, label);
  DigitCodec codec{base.order(), t_count};
  std::vector<std::vector<int>> slot_at(k, std::vector<int>(k, -1));
  for (int i = 0; i < t_count; ++i)
    slot_at[slots[i].first][slots[i].second] = i;
  const int N = static_cast<int>(n);
  RawTables t;
  t.order = N;
  t.add.resize(static_cast<size_t>(N) * N);
  t.mul.resize(static_cast<size_t>(N) * N);
  std::vector<std::vector<int>> mats(N);
  for (int a = 0; a < N; ++a) mats[a] = codec.decode(a);
  std::vector<int> out(t_count);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      const auto& A = mats[a];
      const auto& B = mats[b];
      for (int i = 0; i < t_count; ++i) {
        auto [r, c] = slots[i];
        Idx acc = base.zero();
        for (int j = r; j <= c; ++j)
          acc = base.add(acc, base.mul(A[slot_at[r][j]], B[slot_at[j][c]]));
        out[i] = acc;
      }
      t.mul[static_cast<size_t>(a) * N + b] = codec.encode(out);
      for (int i = 0; i < t_count; ++i) out[i] = base.add(A[i], B[i]);
      t.add[static_cast<size_t>(a) * N + b] = codec.encode(out);
    }
  return FinRing::validate(std::move(t), label);
}

FinRing build_product(const FinRing& A, const FinRing& B, long cap,
                      const std::string& label) {
  long n = static_cast<long>(A.order()) * B.order();
  if (n > cap)
    fail(Errc::SizeBudgetExceeded,
         label + " exceeds the order cap of " + std::to_string(cap));
  const int N = static_cast<int>(n), nb = B.order();
  RawTables t;
  t.order = N;
  t.add.resize(static_cast<size_t>(N) * N);
  t.mul.resize(static_cast<size_t>(N) * N);
  for (int x = 0; x < N; ++x) {
    int xa = x / nb, xb = x % nb;
    for (int y = 0; y < N; ++y) {
      int ya = y / nb, yb = y % nb;
      t.add[static_cast<size_t>(x) * N + y] =
          A.add(xa, ya) * nb + B.add(xb, yb);
      t.mul[static_cast<size_t>(x) * N + y] =
          A.mul(xa, ya) * nb + B.mul(xb, yb);
    }
  }
  return FinRing::validate(std::move(t), label);
}

}  // namespace

std::vector<Idx> identity_star_table(int order) {
  std::vector<Idx> s(order);
  for (int i = 0; i < order; ++i) s[i] = i;
  return s;
}

std::vector<Idx> matrix_transpose_star_table(long base_order, long k) {
  DigitCodec codec{base_order, static_cast<int>(k * k)};
  long n = 1;
  for (long i = 0; i < k * k; ++i) n *= base_order;
  std::vector<Idx> s(n);
  std::vector<int> out(k * k);
  for (long a = 0; a < n; ++a) {
    auto d = codec.decode(a);
    for (long r = 0; r < k; ++r)
      for (long c = 0; c < k; ++c) out[r * k + c] = d[c * k + r];
    s[a] = codec.encode(out);
  }
  return s;
}

std::vector<Idx> uppertri_transpose_star_table(long base_order, long k) {
  // Reflection along the antidiagonal keeps the matrix upper triangular
  // and reverses products.
  auto slots = upper_slots(k);
  const int t_count = static_cast<int>(slots.size());
  std::vector<std::vector<int>> slot_at(k, std::vector<int>(k, -1));
  for (int i = 0; i < t_count; ++i)
    slot_at[slots[i].first][slots[i].second] = i;
  DigitCodec codec{base_order, t_count};
  long n = 1;
  for (int i = 0; i < t_count; ++i) n *= base_order;
  std::vector<Idx> s(n);
  std::vector<int> out(t_count);
  for (long a = 0; a < n; ++a) {
    auto d = codec.decode(a);
    for (int i = 0; i < t_count; ++i) {
      auto [r, c] = slots[i];
      out[i] = d[slot_at[static_cast<int>(k) - 1 - c]
                        [static_cast<int>(k) - 1 - r]];
    }
    s[a] = codec.encode(out);
  }
  return s;
}

std::vector<Idx> swap_star_table(long half_order) {
  long n = half_order * half_order;
  std::vector<Idx> s(n);
  for (long a = 0; a < half_order; ++a)
    for (long b = 0; b < half_order; ++b)
      s[a * half_order + b] = static_cast<Idx>(b * half_order + a);
  return s;
}

FinRing construct(const RingSpec& spec, const ConstructCtx& ctx) {
  const long cap = ctx.budgets.max_order;
  const std::string label = print_spec(spec);
  FinRing R = [&]() -> FinRing {
    switch (spec.kind) {
      case RingSpec::Kind::Zmod:
        if (spec.p < 1)
          fail(Errc::InvalidArgument, "zmod modulus must be >= 1");
        if (spec.p > cap)
          fail(Errc::SizeBudgetExceeded,
               label + " exceeds the order cap of " + std::to_string(cap));
        return build_zmod(spec.p, label);
      case RingSpec::Kind::Gf: {
        if (spec.p < 2 || spec.k < 1)
          fail(Errc::InvalidArgument, "gf requires p >= 2 and k >= 1");
        long n = checked_pow(spec.p, spec.k, cap, label);
        (void)n;
        return build_gf(spec.p, spec.k, label);
      }
      case RingSpec::Kind::Matrix:
        return build_matrix(construct(spec.args[0], ctx), spec.k, cap, label);
      case RingSpec::Kind::UpperTri:
        return build_uppertri(construct(spec.args[0], ctx), spec.k, cap,
                              label);
      case RingSpec::Kind::Product:
        return build_product(construct(spec.args[0], ctx),
                             construct(spec.args[1], ctx), cap, label);
      case RingSpec::Kind::Opposite: {
        FinRing base = construct(spec.args[0], ctx);
        FinRing op = base.opposite();
        op.set_label(label);
        return op;
      }
      case RingSpec::Kind::Raw: {
        std::string path = spec.name;
        if (!ctx.base_dir.empty() && !path.empty() && path[0] != '/')
          path = ctx.base_dir + "/" + path;
        RawTables t = load_raw_tables(path);
        if (t.order > cap)
          fail(Errc::SizeBudgetExceeded,
               label + " exceeds the order cap of " + std::to_string(cap));
        return FinRing::validate(std::move(t), label);
      }
      case RingSpec::Kind::Ref: {
        if (!ctx.env || !ctx.env->count(spec.name))
          fail(Errc::UnknownConstructor,
               "undefined ring name '" + spec.name + "'");
        return *ctx.env->at(spec.name);
      }
    }
    fail(Errc::InternalCheck, "unreachable spec kind");
  }();

  switch (spec.star) {
    case StarKind::None:
      return R;
    case StarKind::Identity:
      return R.with_star(identity_star_table(R.order()), label);
    case StarKind::Transpose: {
      if (spec.kind == RingSpec::Kind::Matrix) {
        long base_order = construct(spec.args[0], ctx).order();
        return R.with_star(matrix_transpose_star_table(base_order, spec.k),
                           label);
      }
      if (spec.kind == RingSpec::Kind::UpperTri) {
        long base_order = construct(spec.args[0], ctx).order();
        return R.with_star(uppertri_transpose_star_table(base_order, spec.k),
                           label);
      }
      fail(Errc::InvalidArgument,
           "transpose involution requires a matrix(...) or uppertri(...) "
           "ring");
    }
    case StarKind::Swap: {
      if (spec.kind != RingSpec::Kind::Product ||
          !(spec.args[0] == spec.args[1]))
        fail(Errc::InvalidArgument,
             "swap involution requires product(A, A) with equal factors");
      long half = construct(spec.args[0], ctx).order();
      return R.with_star(swap_star_table(half), label);
    }
  }
  fail(Errc::InternalCheck, "unreachable star kind");
}

// ---------------------------------------------------------------------------
// Raw table files

RawTables load_raw_tables(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoError, "cannot open '" + path + "'");
  auto bad = [&](const std::string& msg) {
    fail(Errc::SyntaxError, path + ": " + msg);
  };
  std::string kw;
  if (!(in >> kw) || kw != "order") bad("expected 'order'");
  long n;
  if (!(in >> n) || n <= 0) bad("bad order");
  auto read_square = [&](const std::string& name, std::vector<Idx>& out) {
    if (!(in >> kw) || kw != name) bad("expected '" + name + "'");
    out.resize(static_cast<size_t>(n) * n);
    for (auto& v : out)
      if (!(in >> v)) bad("truncated '" + name + "' table");
  };
  RawTables t;
  t.order = static_cast<int>(n);
  read_square("add", t.add);
  read_square("mul", t.mul);
  if (in >> kw) {
    if (kw != "star") bad("unexpected trailing token '" + kw + "'");
    std::vector<Idx> star(n);
    for (auto& v : star)
      if (!(in >> v)) bad("truncated 'star' table");
    t.star = std::move(star);
  }
  return t;
}

void save_raw_tables(const FinRing& R, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::IoError, "cannot write '" + path + "'");
  const int n = R.order();
  out << "order " << n << "\n";
  out << "add\n";
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) out << (b ? " " : "") << R.add(a, b);
    out << "\n";
  }
  out << "mul\n";
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) out << (b ? " " : "") << R.mul(a, b);
    out << "\n";
  }
  if (R.has_star()) {
    out << "star\n";
    for (int a = 0; a < n; ++a) out << (a ? " " : "") << R.star(a);
    out << "\n";
  }
}

}  // namespace ringlab
