#include "metabelian/parser.hpp"

#include <cctype>
#include <set>

#include "metabelian/weitzenbock.hpp"

namespace metab {

namespace {

struct Node {
  enum class Kind { Number, Symbol, Pair, Sum, Product, Power, Bracket, Neg };
  Kind kind;
  int line;
  int column;
  Rational value = 0;
  char symbol = 0;
  int i = 0;
  int j = 0;
  unsigned exponent = 0;
  std::vector<Node> children;

  Node(Kind k, int l, int c) : kind(k), line(l), column(c) {}
};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Node parse() {
    Node n = expr();
    skip_ws();
    if (pos_ < src_.size()) fail(std::string("unexpected '") + src_[pos_] + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      const char got = peek();
      fail(std::string("expected '") + c + "'" + (got ? std::string(", found '") + got + "'" : ", found end of input"));
    }
  }

  Node make(Node::Kind k) const { return Node(k, line_, column_); }

  std::string digits() {
    skip_ws();
    std::string s;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      s += src_[pos_];
      advance();
    }
    if (s.empty()) fail("expected an integer");
    return s;
  }

  int small_integer() {
    const std::string s = digits();
    if (s.size() > 6) fail("index too large");
    return std::stoi(s);
  }

  Node expr() {
    Node sum = make(Node::Kind::Sum);
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    while (true) {
      Node t = term();
      if (negative) {
        Node neg(Node::Kind::Neg, t.line, t.column);
        neg.children.push_back(std::move(t));
        t = std::move(neg);
      }
      sum.children.push_back(std::move(t));
      if (accept('+'))
        negative = false;
      else if (accept('-'))
        negative = true;
      else
        break;
    }
    return sum.children.size() == 1 && sum.children[0].kind != Node::Kind::Neg ? std::move(sum.children[0])
                                                                                : sum;
  }

  Node term() {
    Node prod = make(Node::Kind::Product);
    prod.children.push_back(power());
    while (accept('*')) prod.children.push_back(power());
    return prod.children.size() == 1 ? std::move(prod.children[0]) : prod;
  }

  Node power() {
    Node base = primary();
    if (!accept('^')) return base;
    Node p(Node::Kind::Power, base.line, base.column);
    const std::string e = digits();
    if (e.size() > 4) fail("exponent too large");
    p.exponent = static_cast<unsigned>(std::stoul(e));
    p.children.push_back(std::move(base));
    return p;
  }

  Node primary() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Node n = make(Node::Kind::Number);
      Integer num(digits());
      Integer den = 1;
      if (accept('/')) {
        den = Integer(digits());
        if (den == 0) fail("zero denominator");
      }
      n.value = Rational(num, den);
      n.value.canonicalize();
      return n;
    }
    if (c == '(') {
      advance();
      Node n = expr();
      expect(')');
      return n;
    }
    if (c == '[') {
      Node n = make(Node::Kind::Bracket);
      advance();
      n.children.push_back(expr());
      while (accept(',')) n.children.push_back(expr());
      expect(']');
      if (n.children.size() < 2) fail("a bracket needs at least two entries");
      return n;
    }
    if (c == 'u' || c == 'w') {
      Node n = make(Node::Kind::Pair);
      n.symbol = c;
      advance();
      expect('(');
      n.i = small_integer();
      expect(',');
      n.j = small_integer();
      expect(')');
      return n;
    }
    if (c == 'x' || c == 'y' || c == 'a' || c == 'b' || c == 'p' || c == 'q') {
      Node n = make(Node::Kind::Symbol);
      n.symbol = c;
      advance();
      if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
        fail(std::string("expected an index after '") + c + "'");
      n.i = small_integer();
      return n;
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

[[noreturn]] void fail_at(const Node& n, const std::string& what) { throw ParseError(what, n.line, n.column); }

void check_node_index(const Node& n, int d, int i) {
  if (i < 1 || i > d)
    throw DomainError("index " + std::to_string(i) + " out of range 1.." + std::to_string(d) + " at line " +
                      std::to_string(n.line) + ", column " + std::to_string(n.column));
}

void scan(const Node& n, std::set<char>& symbols, bool& brackets) {
  if (n.kind == Node::Kind::Symbol || n.kind == Node::Kind::Pair) symbols.insert(n.symbol);
  if (n.kind == Node::Kind::Bracket) brackets = true;
  for (const auto& c : n.children) scan(c, symbols, brackets);
}

bool uses_any(const std::set<char>& symbols, std::string_view which) {
  for (char c : which)
    if (symbols.count(c)) return true;
  return false;
}

/// Applies a generic ring-shaped evaluation to sums, negations, products and
/// powers, deferring leaves to `leaf`.
template <class V, class Leaf, class Mul>
V fold(const Node& n, const V& one, const V& zero, Leaf leaf, Mul mul) {
  switch (n.kind) {
    case Node::Kind::Sum: {
      V acc = zero;
      for (const auto& c : n.children) acc = acc + fold(c, one, zero, leaf, mul);
      return acc;
    }
    case Node::Kind::Neg:
      return zero - fold(n.children[0], one, zero, leaf, mul);
    case Node::Kind::Product: {
      V acc = fold(n.children[0], one, zero, leaf, mul);
      for (std::size_t k = 1; k < n.children.size(); ++k) acc = mul(n, acc, fold(n.children[k], one, zero, leaf, mul));
      return acc;
    }
    case Node::Kind::Power: {
      const V base = fold(n.children[0], one, zero, leaf, mul);
      V acc = one;
      for (unsigned k = 0; k < n.exponent; ++k) acc = mul(n, acc, base);
      return acc;
    }
    default:
      return leaf(n);
  }
}

Poly u_poly(const Node& n, int d) {
  check_node_index(n, d, n.i);
  check_node_index(n, d, n.j);
  if (n.i == n.j) return Poly(d);
  return n.i < n.j ? expand_u(d, UGen(n.i, n.j)) : -expand_u(d, UGen(n.j, n.i));
}

// --- polynomials ------------------------------------------------------------

Poly eval_poly(const Node& root, int d) {
  return fold<Poly>(
      root, Poly::constant(d, 1), Poly(d),
      [d](const Node& n) -> Poly {
        if (n.kind == Node::Kind::Number) return Poly::constant(d, n.value);
        if (n.kind == Node::Kind::Symbol && (n.symbol == 'x' || n.symbol == 'y')) {
          check_node_index(n, d, n.i);
          return Poly::variable(d, n.symbol == 'x' ? xvar(n.i) : yvar(n.i));
        }
        if (n.kind == Node::Kind::Pair && n.symbol == 'u') return u_poly(n, d);
        fail_at(n, "not a polynomial in x and y");
      },
      [](const Node&, const Poly& a, const Poly& b) { return a * b; });
}

// --- formal products of x, u with an optional a/w head -----------------------

struct FormalValue {
  FormalScalar scalar;
  FormalModuleElement module;
  FormalValue operator+(const FormalValue& o) const { return {scalar + o.scalar, module + o.module}; }
  FormalValue operator-(const FormalValue& o) const { return {scalar - o.scalar, module - o.module}; }
};

FormalValue eval_formal(const Node& root, int d) {
  const FormalValue zero{FormalScalar(d), FormalModuleElement(d)};
  FormalValue one = zero;
  one.scalar.add(ConstantWord{}, 1);
  return fold<FormalValue>(
      root, one, zero,
      [d, zero](const Node& n) -> FormalValue {
        FormalValue v = zero;
        if (n.kind == Node::Kind::Number) {
          v.scalar.add(ConstantWord{}, n.value);
        } else if (n.kind == Node::Kind::Symbol && n.symbol == 'x') {
          check_node_index(n, d, n.i);
          v.scalar.add(ConstantWord({n.i}, {}), 1);
        } else if (n.kind == Node::Kind::Symbol && n.symbol == 'a') {
          check_node_index(n, d, n.i);
          v.module.add(ModuleWord{AHead{n.i}, {}}, 1);
        } else if (n.kind == Node::Kind::Pair && n.symbol == 'u') {
          check_node_index(n, d, n.i);
          check_node_index(n, d, n.j);
          if (n.i < n.j) v.scalar.add(ConstantWord({}, {UGen(n.i, n.j)}), 1);
          if (n.i > n.j) v.scalar.add(ConstantWord({}, {UGen(n.j, n.i)}), -1);
        } else if (n.kind == Node::Kind::Pair && n.symbol == 'w') {
          check_node_index(n, d, n.i);
          check_node_index(n, d, n.j);
          v.module.add(ModuleWord{WGen{n.i, n.j}, {}}, 1);
        } else {
          fail_at(n, "only x, u, a and w may appear in a formal product");
        }
        return v;
      },
      [](const Node& n, const FormalValue& a, const FormalValue& b) {
        if (!a.module.is_zero() && !b.module.is_zero()) fail_at(n, "product of two module heads");
        return FormalValue{a.scalar * b.scalar, a.module * b.scalar + b.module * a.scalar};
      });
}

// --- bracket expressions ---------------------------------------------------

struct LieValue {
  Poly scalar;
  LieExpr lie;
  LieValue operator+(const LieValue& o) const { return {scalar + o.scalar, lie + o.lie}; }
  LieValue operator-(const LieValue& o) const { return {scalar - o.scalar, lie - o.lie}; }
};

LieExpr times(const Node& n, const LieExpr& e, const Poly& f) {
  if (f.is_zero()) return LieExpr(e.rank());
  if (f.degree() == 0) return e * f.terms().begin()->second;
  try {
    return e * f;
  } catch (const DomainError& err) {
    fail_at(n, err.what());
  }
}

/// Reads a linear polynomial as a combination of generators.
LieExpr generators_of(const Node& n, const Poly& p) {
  LieExpr e(p.rank());
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != 1) fail_at(n, "expected a bracket or a combination of generators x_i, y_i");
    const auto exps = m.exponents();
    for (std::size_t s = 0; s < exps.size(); ++s)
      if (exps[s]) e += LieExpr::word(p.rank(), {Monomial::variable_at(p.rank(), s)}, c);
  }
  return e;
}

LieValue eval_lie(const Node& root, int d);

LieExpr lie_of(const Node& n, int d) {
  LieValue v = eval_lie(n, d);
  return v.lie + generators_of(n, v.scalar);
}

LieValue eval_lie(const Node& root, int d) {
  const LieValue zero{Poly(d), LieExpr(d)};
  const LieValue one{Poly::constant(d, 1), LieExpr(d)};
  return fold<LieValue>(
      root, one, zero,
      [d, zero](const Node& n) -> LieValue {
        LieValue v = zero;
        if (n.kind == Node::Kind::Bracket) {
          LieExpr acc = lie_of(n.children[0], d);
          for (std::size_t k = 1; k < n.children.size(); ++k) acc = lie_bracket(acc, lie_of(n.children[k], d));
          v.lie = std::move(acc);
        } else {
          v.scalar = eval_poly(n, d);
        }
        return v;
      },
      [](const Node& n, const LieValue& a, const LieValue& b) {
        if (!a.lie.empty() && !b.lie.empty()) fail_at(n, "product of two bracket expressions");
        return LieValue{a.scalar * b.scalar, times(n, a.lie, b.scalar) + times(n, b.lie, a.scalar)};
      });
}

// --- wreath product elements -------------------------------------------------

struct WreathValue {
  Poly scalar;
  WreathElement element;
  WreathValue operator+(const WreathValue& o) const { return {scalar + o.scalar, element + o.element}; }
  WreathValue operator-(const WreathValue& o) const { return {scalar - o.scalar, element - o.element}; }
};

WreathElement times(const Node& n, const WreathElement& w, const Poly& f) {
  if (w.in_module()) return module_action(w, f);
  if (f.is_zero()) return WreathElement(w.rank());
  if (f.degree() == 0) return w * f.terms().begin()->second;
  fail_at(n, "elements p_i, q_i cannot be multiplied by polynomials");
}

WreathValue eval_wreath(const Node& root, int d);

WreathElement wreath_of_entry(const Node& n, int d) {
  std::set<char> symbols;
  bool brackets = false;
  scan(n, symbols, brackets);
  if (!uses_any(symbols, "abpquw")) return embed(lie_of(n, d));
  WreathValue v = eval_wreath(n, d);
  if (!v.scalar.is_zero()) fail_at(n, "bracket entry has a polynomial term without a generator of W");
  return v.element;
}

WreathValue eval_wreath(const Node& root, int d) {
  const WreathValue zero{Poly(d), WreathElement(d)};
  const WreathValue one{Poly::constant(d, 1), WreathElement(d)};
  return fold<WreathValue>(
      root, one, zero,
      [d, zero](const Node& n) -> WreathValue {
        WreathValue v = zero;
        switch (n.kind) {
          case Node::Kind::Bracket: {
            WreathElement acc = wreath_of_entry(n.children[0], d);
            for (std::size_t k = 1; k < n.children.size(); ++k) acc = bracket(acc, wreath_of_entry(n.children[k], d));
            v.element = std::move(acc);
            break;
          }
          case Node::Kind::Symbol:
            check_node_index(n, d, n.i);
            if (n.symbol == 'a' || n.symbol == 'b')
              v.element = WreathElement::module(d, ModuleGenerator{n.symbol == 'a' ? ModuleKind::A : ModuleKind::B, n.i});
            else if (n.symbol == 'p' || n.symbol == 'q')
              v.element = WreathElement::linear(d, LinearGenerator{n.symbol == 'p' ? LinearKind::P : LinearKind::Q, n.i});
            else
              v.scalar = eval_poly(n, d);
            break;
          case Node::Kind::Pair:
            if (n.symbol == 'u') {
              v.scalar = u_poly(n, d);
            } else {
              check_node_index(n, d, n.i);
              check_node_index(n, d, n.j);
              v.element = expand_w(d, WGen{n.i, n.j});
            }
            break;
          default:
            v.scalar = eval_poly(n, d);
        }
        return v;
      },
      [](const Node& n, const WreathValue& a, const WreathValue& b) {
        if (!a.element.is_zero() && !b.element.is_zero()) fail_at(n, "product of two elements of W (use a bracket)");
        return WreathValue{a.scalar * b.scalar, times(n, a.element, b.scalar) + times(n, b.element, a.scalar)};
      });
}

Node parse_tree(std::string_view src, int d) {
  check_rank(d);
  return Parser(src).parse();
}

}  // namespace

Poly parse_poly(std::string_view src, int d) { return eval_poly(parse_tree(src, d), d); }

FormalScalar parse_scalar(std::string_view src, int d) {
  const Node root = parse_tree(src, d);
  FormalValue v = eval_formal(root, d);
  if (!v.module.is_zero()) fail_at(root, "expected products of x and u only");
  return v.scalar;
}

FormalModuleElement parse_module(std::string_view src, int d) {
  const Node root = parse_tree(src, d);
  FormalValue v = eval_formal(root, d);
  if (!v.scalar.is_zero()) fail_at(root, "every term needs exactly one a_i or w(p,q) factor");
  return v.module;
}

WreathElement parse_wreath(std::string_view src, int d) {
  const Node root = parse_tree(src, d);
  WreathValue v = eval_wreath(root, d);
  if (!v.scalar.is_zero()) fail_at(root, "polynomial term without a generator of W");
  return v.element;
}

LieExpr parse_lie(std::string_view src, int d) {
  const Node root = parse_tree(src, d);
  return lie_of(root, d);
}

ParsedValue parse_expr(std::string_view src, int d) {
  const Node root = parse_tree(src, d);
  std::set<char> symbols;
  bool brackets = false;
  scan(root, symbols, brackets);
  if (brackets) {
    if (!uses_any(symbols, "abpquw")) return lie_of(root, d);
    WreathValue v = eval_wreath(root, d);
    if (!v.scalar.is_zero()) fail_at(root, "polynomial term without a generator of W");
    return v.element;
  }
  if (uses_any(symbols, "aw") && !uses_any(symbols, "bpqy")) {
    FormalValue v = eval_formal(root, d);
    if (!v.scalar.is_zero()) fail_at(root, "every term needs exactly one a_i or w(p,q) factor");
    return v.module;
  }
  if (uses_any(symbols, "abpqw")) {
    WreathValue v = eval_wreath(root, d);
    if (!v.scalar.is_zero()) fail_at(root, "polynomial term without a generator of W");
    return v.element;
  }
  if (symbols.count('u') && !symbols.count('y')) return eval_formal(root, d).scalar;
  return eval_poly(root, d);
}

}  // namespace metab
