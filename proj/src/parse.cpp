#include "wminus/parse.hpp"

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wminus {

namespace {

struct Token {
  enum Type { Int, Ident, Punct, End };
  Type type;
  std::string text;
  size_t pos;
};

// Names containing '-' that must not lex as subtraction.
constexpr const char* kGlueNames[] = {"H-2X", "h-1x2"};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    bool glued = false;
    for (const char* name : kGlueNames) {
      std::string_view n(name);
      if (src.substr(i, n.size()) == n) {
        out.push_back({Token::Ident, std::string(n), i});
        i += n.size();
        glued = true;
        break;
      }
    }
    if (glued) continue;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::Int, std::string(src.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      out.push_back({Token::Ident, std::string(src.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (std::string_view("+-*/()[],").find(c) != std::string_view::npos) {
      out.push_back({Token::Punct, std::string(1, c), i});
      ++i;
      continue;
    }
    throw ParseError(i, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Token::End, "", src.size()});
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::string_view src) : toks_(lex(src)) {}

  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_ == toks_.size() - 1 ? i_ : i_++]; }
  bool at_punct(const std::string& p) const {
    return peek().type == Token::Punct && peek().text == p;
  }
  void expect_punct(const std::string& p) {
    if (!at_punct(p)) throw ParseError(peek().pos, "expected '" + p + "'");
    next();
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(peek().pos, msg); }

  int64_t parse_int() {
    bool neg = false;
    if (at_punct("-")) {
      next();
      neg = true;
    }
    if (peek().type != Token::Int) fail("expected an integer");
    int64_t v = std::stoll(next().text);
    return neg ? -v : v;
  }

  Rat parse_rational() {
    // Digits, optionally '/digits'; sign is handled by the caller.
    if (peek().type != Token::Int) fail("expected a number");
    Rat num(Int(next().text));
    if (at_punct("/")) {
      next();
      if (peek().type != Token::Int) fail("expected a denominator");
      Rat den(Int(next().text));
      if (den == 0) fail("zero denominator");
      num /= den;
    }
    return num;
  }

 private:
  std::vector<Token> toks_;
  size_t i_ = 0;
};

// Per-context hooks for the shared grammar.
template <typename V>
struct Ops {
  using Value = V;
  std::function<V(Cursor&)> atom;                 // at Ident, or '[' when bracket_atom
  std::function<V(const V&, const V&)> mul;       // element product; null = reject
  std::function<V(const V&, const V&)> comm;      // commutator; null = reject
  std::function<V(const Scalar&)> unit;           // bare-scalar term; null = reject
  std::function<V(const Scalar&, const V&)> scale;
  std::function<V(const V&, const V&, int)> add;  // sign -1 subtracts
  V zero;
  bool bracket_atom = false;  // '[' begins an atom (partition) instead of a commutator
};

template <typename V>
V parse_expr(Cursor& c, const Ops<V>& ops);

template <typename V>
V parse_factor_chain(Cursor& c, const Ops<V>& ops) {
  Scalar coeff(1);
  std::optional<V> val;
  bool first = true;
  while (true) {
    if (!first) {
      if (!c.at_punct("*")) break;
      c.next();
    }
    bool neg = false;
    while (c.at_punct("-")) {
      c.next();
      neg = !neg;
    }
    std::optional<V> piece;
    const Token& t = c.peek();
    if (t.type == Token::Int) {
      coeff *= Scalar(c.parse_rational());
    } else if (t.type == Token::Ident && t.text == "s2") {
      c.next();
      coeff *= Scalar::sqrt2();
    } else if (t.type == Token::Ident) {
      piece = ops.atom(c);
    } else if (c.at_punct("(")) {
      c.next();
      piece = parse_expr(c, ops);
      c.expect_punct(")");
    } else if (c.at_punct("[")) {
      if (ops.bracket_atom) {
        piece = ops.atom(c);
      } else if (ops.comm) {
        size_t open = t.pos;
        c.next();
        V lhs = parse_expr(c, ops);
        c.expect_punct(",");
        V rhs = parse_expr(c, ops);
        if (!c.at_punct("]")) throw ParseError(open, "unterminated commutator");
        c.next();
        piece = ops.comm(lhs, rhs);
      } else {
        c.fail("'[' is not valid here");
      }
    } else {
      c.fail("expected a factor");
    }
    if (neg) coeff *= Scalar(-1);
    if (piece) {
      if (val) {
        if (!ops.mul) c.fail("products of elements are not defined here");
        val = ops.mul(*val, *piece);
      } else {
        val = std::move(piece);
      }
    }
    first = false;
  }
  if (val) return ops.scale(coeff, *val);
  if (!ops.unit) {
    // The zero scalar is the zero element of every type, so rendered zeros
    // re-parse even where bare scalars are otherwise meaningless.
    if (coeff.is_zero()) return ops.zero;
    throw ParseError(c.peek().pos, "a bare scalar is not an element here");
  }
  return ops.unit(coeff);
}

template <typename V>
V parse_expr(Cursor& c, const Ops<V>& ops) {
  V acc = ops.add(ops.zero, parse_factor_chain(c, ops), 1);
  while (c.at_punct("+") || c.at_punct("-")) {
    int sign = c.at_punct("+") ? 1 : -1;
    c.next();
    acc = ops.add(acc, parse_factor_chain(c, ops), sign);
  }
  return acc;
}

template <typename V>
V parse_top(std::string_view src, const Ops<V>& ops) {
  Cursor c(src);
  V v = parse_expr(c, ops);
  if (c.peek().type != Token::End) c.fail("trailing input");
  return v;
}

std::pair<int64_t, int64_t> parse_index_pair(Cursor& c) {
  c.expect_punct("[");
  int64_t a = c.parse_int();
  c.expect_punct(",");
  int64_t b = c.parse_int();
  c.expect_punct("]");
  return {a, b};
}

LieElement lie_atom(Cursor& c) {
  const Token t = c.next();
  if (t.text == "C") return lie_central();
  if (t.text == "w") {
    auto [k, l] = parse_index_pair(c);
    if (l < 0) throw ParseError(t.pos, "w[k,l] needs l >= 0");
    return lie_w(k, l);
  }
  if (t.text == "b") {
    auto [j, l] = parse_index_pair(c);
    try {
      return wminus_basis_element(j, l);
    } catch (const std::invalid_argument& e) {
      throw ParseError(t.pos, e.what());
    }
  }
  throw ParseError(t.pos, "unknown element '" + t.text + "'");
}

EnvElement env_atom(Cursor& c) {
  const Token t = c.next();
  if (t.text == "C") return env_central();
  if (t.text == "b") {
    auto [j, l] = parse_index_pair(c);
    try {
      return env_gen(j, l);
    } catch (const std::invalid_argument& e) {
      throw ParseError(t.pos, e.what());
    }
  }
  if (t.text == "w") {
    auto [k, l] = parse_index_pair(c);
    if (l < 0) throw ParseError(t.pos, "w[k,l] needs l >= 0");
    try {
      return env_from_lie(lie_w(k, l));
    } catch (const std::domain_error& e) {
      throw ParseError(t.pos, e.what());
    }
  }
  throw ParseError(t.pos, "unknown element '" + t.text + "'");
}

FockVector fock_atom(Cursor& c) {
  const Token& open = c.peek();
  c.expect_punct("[");
  Partition p;
  if (!c.at_punct("]")) {
    while (true) {
      int64_t part = c.parse_int();
      if (part < 1) throw ParseError(open.pos, "partition parts must be positive");
      p.push_back(part);
      if (c.at_punct("]")) break;
      c.expect_punct(",");
    }
  }
  c.next();
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] < p[i + 1]) throw ParseError(open.pos, "partition parts must be weakly decreasing");
  return fock_basis(std::move(p));
}

HeisElement heis_atom(Cursor& c) {
  const Token t = c.next();
  if (t.text == "K") {
    HeisElement k;
    k.cK = Scalar(1);
    return k;
  }
  if (t.text != "h") throw ParseError(t.pos, "unknown element '" + t.text + "'");
  c.expect_punct("[");
  int64_t num = c.parse_int();
  c.expect_punct("/");
  if (c.peek().type != Token::Int || c.peek().text != "2")
    c.fail("half-integer index must have denominator 2");
  c.next();
  c.expect_punct("]");
  if (num % 2 == 0) throw ParseError(t.pos, "index numerator must be odd");
  return heis_h(num);
}

TraceExpr trace_atom_parse(Cursor& c) {
  const Token t = c.next();
  if (t.text == "H2X") return trace_gen(TraceAtom::H2X);
  if (t.text == "H-2X") return trace_gen(TraceAtom::Hm2X);
  if (t.text == "D02") return trace_gen(TraceAtom::D02);
  if (t.text == "H") {
    c.expect_punct("[");
    int64_t n = c.parse_int();
    c.expect_punct("]");
    if (n != -1) throw ParseError(t.pos, "the only bracketed generator is H[-1]");
    return trace_gen(TraceAtom::Hm1);
  }
  if (t.text == "h" && c.at_punct("[")) {
    c.next();
    int64_t n = c.parse_int();
    c.expect_punct("]");
    if (n % 2 == 0) throw ParseError(t.pos, "cycle names h[n] use odd n");
    if (n == -1) return trace_gen(TraceAtom::Hm1);  // h[-1] is the generator
    return trace_name("h[" + std::to_string(n) + "]");
  }
  // Any other identifier is a ledger name, resolved at expansion time.
  return trace_name(t.text);
}

}  // namespace

Scalar parse_scalar(std::string_view src) {
  Ops<Scalar> ops;
  ops.zero = Scalar(0);
  ops.add = [](const Scalar& a, const Scalar& x, int sign) {
    return sign > 0 ? a + x : a - x;
  };
  ops.scale = [](const Scalar& s, const Scalar& v) { return s * v; };
  ops.unit = [](const Scalar& s) { return s; };
  ops.atom = [](Cursor& c) -> Scalar { c.fail("expected a scalar"); };
  return parse_top(src, ops);
}

LieElement parse_lie(std::string_view src) {
  Ops<LieElement> ops;
  ops.zero = LieElement{};
  ops.add = [](const LieElement& a, const LieElement& x, int sign) {
    LieElement out = a;
    out.add(x, Scalar(sign));
    return out;
  };
  ops.scale = [](const Scalar& s, const LieElement& v) { return s * v; };
  ops.unit = nullptr;
  ops.atom = lie_atom;
  return parse_top(src, ops);
}

EnvElement parse_env(std::string_view src) {
  Ops<EnvElement> ops;
  ops.zero = EnvElement{};
  ops.add = [](const EnvElement& a, const EnvElement& x, int sign) {
    EnvElement out = a;
    out.add(x, Scalar(sign));
    return out;
  };
  ops.scale = [](const Scalar& s, const EnvElement& v) { return s * v; };
  ops.unit = [](const Scalar& s) { return env_scalar(s); };
  ops.atom = env_atom;
  ops.mul = multiply;
  return parse_top(src, ops);
}

FockVector parse_fock(std::string_view src) {
  Ops<FockVector> ops;
  ops.zero = FockVector{};
  ops.add = [](const FockVector& a, const FockVector& x, int sign) {
    FockVector out = a;
    out.add(x, Scalar(sign));
    return out;
  };
  ops.scale = [](const Scalar& s, const FockVector& v) { return s * v; };
  ops.unit = nullptr;
  ops.atom = fock_atom;
  ops.bracket_atom = true;
  return parse_top(src, ops);
}

HeisElement parse_heis(std::string_view src) {
  Ops<HeisElement> ops;
  ops.zero = HeisElement{};
  ops.add = [](const HeisElement& a, const HeisElement& x, int sign) {
    HeisElement out = a;
    for (const auto& [n, v] : x.terms) out.add_term(n, sign > 0 ? v : -v);
    out.cK += sign > 0 ? x.cK : -x.cK;
    return out;
  };
  ops.scale = [](const Scalar& s, const HeisElement& v) {
    HeisElement out;
    for (const auto& [n, c] : v.terms) out.add_term(n, c * s);
    out.cK = v.cK * s;
    return out;
  };
  ops.unit = nullptr;
  ops.atom = heis_atom;
  return parse_top(src, ops);
}

TraceExpr parse_trace(std::string_view src) {
  Ops<TraceExpr> ops;
  ops.zero = TraceExpr{};
  ops.add = [](const TraceExpr& a, const TraceExpr& x, int sign) {
    TraceExpr out = a;
    out.add(x, Scalar(sign));
    return out;
  };
  ops.scale = [](const Scalar& s, const TraceExpr& v) { return s * v; };
  ops.unit = [](const Scalar& s) { return trace_unit(s); };
  ops.atom = trace_atom_parse;
  ops.mul = trace_mul;
  ops.comm = trace_comm;
  return parse_top(src, ops);
}

Partition parse_partition_literal(std::string_view src) {
  FockVector v = parse_fock(src);
  if (v.terms.size() != 1 || !(v.terms.begin()->second == Scalar(1)))
    throw ParseError(0, "expected a single partition literal");
  return v.terms.begin()->first;
}

}  // namespace wminus
