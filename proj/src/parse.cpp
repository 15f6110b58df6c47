#include "gmd/parse.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>

namespace gmd {

namespace {

enum class Tok { Ident, Int, Sym, Newline, End };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

struct Lexer {
  explicit Lexer(const std::string& s) : src(s) { advance(); }

  const Token& peek() const { return tok; }
  Token take() {
    Token t = tok;
    advance();
    return t;
  }
  bool accept_sym(const char* s) {
    if (tok.kind == Tok::Sym && tok.text == s) {
      advance();
      return true;
    }
    return false;
  }
  bool accept_ident(const char* s) {
    if (tok.kind == Tok::Ident && tok.text == s) {
      advance();
      return true;
    }
    return false;
  }
  void expect_sym(const char* s) {
    if (!accept_sym(s)) fail(std::string("expected '") + s + "'");
  }
  void skip_newlines() {
    while (tok.kind == Tok::Newline) advance();
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(tok.line, tok.col, msg); }

 private:
  void advance() {
    while (pos < src.size()) {
      char c = src[pos];
      if (c == '-' && pos + 1 < src.size() && src[pos + 1] == '-') {
        while (pos < src.size() && src[pos] != '\n') ++pos;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r') {
        ++pos, ++col;
        continue;
      }
      break;
    }
    tok.line = line;
    tok.col = col;
    if (pos >= src.size()) {
      tok = {Tok::End, "", line, col};
      return;
    }
    char c = src[pos];
    if (c == '\n') {
      tok = {Tok::Newline, "\n", line, col};
      ++pos, ++line;
      col = 1;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos, ++col;
      tok = {Tok::Int, src.substr(start, pos - start), line, tok.col};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < src.size() && (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
        ++pos, ++col;
      tok = {Tok::Ident, src.substr(start, pos - start), line, tok.col};
      return;
    }
    tok = {Tok::Sym, std::string(1, c), line, col};
    ++pos, ++col;
  }

  const std::string& src;
  size_t pos = 0;
  int line = 1, col = 1;
  Token tok{Tok::End, "", 1, 1};
};

long long parse_int(Lexer& lx, const char* what) {
  if (lx.peek().kind != Tok::Int) lx.fail(std::string("expected ") + what);
  Token t = lx.take();
  try {
    return std::stoll(t.text);
  } catch (...) {
    throw ParseError(t.line, t.col, "integer out of range");
  }
}

struct RingDecl {
  bool rational = false;
  long long p = 0;
  std::vector<std::string> vars;
  OrderKind kind = OrderKind::GrevLex;
  std::vector<int> perm;
};

RingDecl parse_ring_tokens(Lexer& lx) {
  RingDecl d;
  if (!lx.accept_ident("ring")) lx.fail("expected 'ring'");
  if (lx.accept_ident("QQ")) {
    d.rational = true;
  } else if (lx.accept_ident("GF")) {
    lx.expect_sym("(");
    d.p = parse_int(lx, "prime");
    lx.expect_sym(")");
  } else {
    lx.fail("expected field QQ or GF(p)");
  }
  lx.expect_sym("[");
  while (true) {
    if (lx.peek().kind != Tok::Ident) lx.fail("expected variable name");
    d.vars.push_back(lx.take().text);
    if (lx.accept_sym("]")) break;
    lx.expect_sym(",");
  }
  std::set<std::string> seen(d.vars.begin(), d.vars.end());
  if (seen.size() != d.vars.size()) lx.fail("duplicate variable name");
  if (lx.accept_ident("order")) {
    lx.expect_sym("=");
    if (lx.accept_ident("lex")) d.kind = OrderKind::Lex;
    else if (lx.accept_ident("grlex")) d.kind = OrderKind::GrLex;
    else if (lx.accept_ident("grevlex")) d.kind = OrderKind::GrevLex;
    else lx.fail("expected order lex, grlex or grevlex");
  }
  d.perm.resize(d.vars.size());
  std::iota(d.perm.begin(), d.perm.end(), 0);
  if (lx.accept_ident("vars")) {
    lx.expect_sym("=");
    bool paren = lx.accept_sym("(");
    std::vector<int> perm;
    while (true) {
      if (lx.peek().kind != Tok::Ident) lx.fail("expected variable name in permutation");
      Token t = lx.take();
      auto it = std::find(d.vars.begin(), d.vars.end(), t.text);
      if (it == d.vars.end()) throw ParseError(t.line, t.col, "unknown variable " + t.text);
      perm.push_back(static_cast<int>(it - d.vars.begin()));
      if (lx.peek().kind == Tok::Sym && lx.peek().text == ",") {
        lx.take();
        continue;
      }
      break;
    }
    if (paren) lx.expect_sym(")");
    std::set<int> uniq(perm.begin(), perm.end());
    if (perm.size() != d.vars.size() || uniq.size() != perm.size())
      lx.fail("permutation must list every variable exactly once");
    d.perm = std::move(perm);
  }
  return d;
}

template <class F>
RingPtr<F> build_ring(const RingDecl& d, F field) {
  MonomialOrder o;
  o.kind = d.kind;
  o.perm = d.perm;
  return std::make_shared<const PolyRing<F>>(std::move(field), d.vars, std::move(o));
}

// split a concatenated identifier chunk into declared variable names
bool split_vars(const std::string& chunk, const std::vector<std::string>& vars,
                std::vector<int>& out) {
  if (chunk.empty()) return true;
  // prefer the longest prefix, backtracking on failure
  std::vector<int> byLen(vars.size());
  std::iota(byLen.begin(), byLen.end(), 0);
  std::sort(byLen.begin(), byLen.end(),
            [&](int a, int b) { return vars[a].size() > vars[b].size(); });
  for (int vi : byLen) {
    const std::string& v = vars[vi];
    if (chunk.size() >= v.size() && chunk.compare(0, v.size(), v) == 0) {
      out.push_back(vi);
      if (split_vars(chunk.substr(v.size()), vars, out)) return true;
      out.pop_back();
    }
  }
  return false;
}

template <class F>
typename F::Elem parse_coeff(Lexer& lx, const F& field);

template <>
PrimeField::Elem parse_coeff<PrimeField>(Lexer& lx, const PrimeField& field) {
  Token t = lx.peek();
  long long n = parse_int(lx, "coefficient");
  if (lx.peek().kind == Tok::Sym && lx.peek().text == "/")
    throw ParseError(t.line, t.col, "rational coefficient over " + field.name());
  return field.from_int(n);
}

template <>
RationalField::Elem parse_coeff<RationalField>(Lexer& lx, const RationalField& field) {
  long long n = parse_int(lx, "coefficient");
  if (lx.accept_sym("/")) {
    long long d = parse_int(lx, "denominator");
    if (d == 0) lx.fail("zero denominator");
    return field.from_fraction(n, d);
  }
  return field.from_int(n);
}

template <class F>
Polynomial<F> parse_poly_tokens(Lexer& lx, const RingPtr<F>& ring) {
  using P = Polynomial<F>;
  const auto& fld = ring->field;
  P result(ring);
  bool first = true;
  while (true) {
    bool negative = false;
    if (lx.accept_sym("-")) negative = true;
    else if (lx.accept_sym("+")) negative = false;
    else if (!first) break;
    P term = P::constant(ring, fld.one());
    bool any_factor = false;
    while (true) {
      const Token& t = lx.peek();
      if (t.kind == Tok::Int) {
        term = term.scaled(parse_coeff<F>(lx, fld));
        any_factor = true;
      } else if (t.kind == Tok::Ident) {
        Token chunk = lx.take();
        std::vector<int> split;
        if (!split_vars(chunk.text, ring->vars, split))
          throw ParseError(chunk.line, chunk.col, "unknown variable " + chunk.text);
        for (size_t k = 0; k < split.size(); ++k) {
          int exp = 1;
          if (k + 1 == split.size() && lx.peek().kind == Tok::Sym && lx.peek().text == "^") {
            lx.take();
            long long e = parse_int(lx, "exponent");
            if (e < 0 || e > 0xffff) lx.fail("exponent out of range");
            exp = static_cast<int>(e);
          }
          term = term * P::variable(ring, split[k], exp);
        }
        any_factor = true;
      } else {
        break;
      }
      if (!lx.accept_sym("*")) {
        // juxtaposition: another coefficient or variable continues the term
        const Token& nx = lx.peek();
        if (nx.kind != Tok::Ident && nx.kind != Tok::Int) break;
      }
    }
    if (!any_factor) lx.fail("expected term");
    if (negative) term = -term;
    result = result + term;
    first = false;
  }
  return result;
}

template <class F>
IdealFileData<F> parse_ideal_tokens(Lexer& lx, RingPtr<F> ring) {
  IdealFileData<F> out;
  out.ring = ring;
  lx.skip_newlines();
  if (!lx.accept_ident("ideal")) lx.fail("expected 'ideal:'");
  lx.expect_sym(":");
  lx.skip_newlines();
  while (true) {
    const Token& t = lx.peek();
    if (t.kind == Tok::End) break;
    if (t.kind == Tok::Ident && t.text == "primes") break;
    Polynomial<F> f = parse_poly_tokens(lx, ring);
    if (f.is_zero()) lx.fail("zero generator");
    out.gens.push_back(std::move(f));
    if (lx.accept_sym(",")) {
      lx.skip_newlines();
      continue;
    }
    if (lx.peek().kind == Tok::Newline) {
      lx.skip_newlines();
      continue;
    }
    if (lx.peek().kind == Tok::End) break;
    if (lx.peek().kind == Tok::Ident && lx.peek().text == "primes") break;
    lx.fail("expected ',' or newline after generator");
  }
  if (out.gens.empty()) lx.fail("empty generator list");
  while (lx.accept_ident("primes")) {
    lx.expect_sym(":");
    lx.skip_newlines();
    bool any = false;
    while (lx.peek().kind == Tok::Sym && lx.peek().text == "(") {
      lx.take();
      std::vector<Polynomial<F>> block;
      while (true) {
        Polynomial<F> f = parse_poly_tokens(lx, ring);
        const Token t = lx.peek();
        if (f.is_zero() || f.degree() != 1 || !f.is_homogeneous())
          throw ParseError(t.line, t.col, "prime generators must be nonzero linear forms");
        block.push_back(std::move(f));
        if (lx.accept_sym(",")) continue;
        break;
      }
      lx.expect_sym(")");
      if (block.empty()) lx.fail("malformed prime block");
      out.primes.push_back(std::move(block));
      lx.skip_newlines();
      any = true;
    }
    if (!any) lx.fail("malformed prime block: expected '('");
    lx.skip_newlines();
  }
  lx.skip_newlines();
  if (lx.peek().kind != Tok::End) lx.fail("unexpected trailing input");
  return out;
}

}  // namespace

RingVariant parse_ring_decl(const std::string& text) {
  Lexer lx(text);
  lx.skip_newlines();
  RingDecl d = parse_ring_tokens(lx);
  if (d.rational) return build_ring(d, RationalField{});
  return build_ring(d, PrimeField(d.p));
}

IdealFileVariant parse_ideal_file(const std::string& text) {
  Lexer lx(text);
  lx.skip_newlines();
  RingDecl d = parse_ring_tokens(lx);
  if (d.rational) {
    auto ring = build_ring(d, RationalField{});
    return parse_ideal_tokens<RationalField>(lx, ring);
  }
  auto ring = build_ring(d, PrimeField(d.p));
  return parse_ideal_tokens<PrimeField>(lx, ring);
}

template <class F>
static Polynomial<F> parse_poly_str(const RingPtr<F>& ring, const std::string& text) {
  Lexer lx(text);
  lx.skip_newlines();
  Polynomial<F> f = parse_poly_tokens(lx, ring);
  lx.skip_newlines();
  if (lx.peek().kind != Tok::End) lx.fail("unexpected trailing input");
  return f;
}

Polynomial<PrimeField> parse_polynomial(const RingPtr<PrimeField>& ring, const std::string& text) {
  return parse_poly_str(ring, text);
}
Polynomial<RationalField> parse_polynomial(const RingPtr<RationalField>& ring, const std::string& text) {
  return parse_poly_str(ring, text);
}

PointsFileData parse_points_file(const std::string& text) {
  Lexer lx(text);
  lx.skip_newlines();
  if (!lx.accept_ident("points")) lx.fail("expected 'points'");
  if (!lx.accept_ident("GF")) lx.fail("expected 'GF(p)'");
  lx.expect_sym("(");
  long long p = parse_int(lx, "prime");
  if (!PrimeField::is_prime(p)) lx.fail("modulus must be prime");
  lx.expect_sym(")");
  if (!lx.accept_ident("dim")) lx.fail("expected 'dim='");
  lx.expect_sym("=");
  long long dim = parse_int(lx, "dimension");
  if (dim < 2 || dim > kMaxVars - 1) lx.fail("dim out of range");
  PointsFileData out;
  out.p = p;
  out.dim = static_cast<int>(dim);
  PrimeField fld(p);
  std::set<std::vector<long long>> seen;
  lx.skip_newlines();
  while (lx.peek().kind != Tok::End) {
    Token open = lx.peek();
    lx.expect_sym("(");
    std::vector<long long> c;
    while (true) {
      bool neg = lx.accept_sym("-");
      long long v = parse_int(lx, "coordinate");
      c.push_back(fld.from_int(neg ? -v : v));
      if (lx.accept_sym(":")) continue;
      break;
    }
    lx.expect_sym(")");
    if (static_cast<int>(c.size()) != out.dim)
      throw ParseError(open.line, open.col, "point has wrong number of coordinates");
    int lead = -1;
    for (size_t i = 0; i < c.size() && lead < 0; ++i)
      if (c[i]) lead = static_cast<int>(i);
    if (lead < 0) throw ParseError(open.line, open.col, "zero vector is not a projective point");
    long long inv = fld.inv(c[lead]);
    for (auto& x : c) x = fld.mul(x, inv);
    if (!seen.insert(c).second)
      throw ParseError(open.line, open.col, "duplicate point after normalization");
    out.points.push_back(std::move(c));
    lx.skip_newlines();
  }
  if (out.points.empty()) lx.fail("no points given");
  return out;
}

}  // namespace gmd
