#include <gtest/gtest.h>

#include "metabelian/parser.hpp"
#include "support/random.hpp"

using namespace metab;
namespace mt = metab::testing;

TEST(Parser, ClassifiesExpressions) {
  EXPECT_TRUE(std::holds_alternative<FormalScalar>(parse_expr("u(1,2)", 2)));
  EXPECT_TRUE(std::holds_alternative<LieExpr>(parse_expr("[x1,y2]+[x2,y1]", 2)));
  EXPECT_THROW(parse_expr("3/2*x1*u(1,3) - w(1,3)*x2", 3), ParseError);
  EXPECT_TRUE(std::holds_alternative<FormalModuleElement>(parse_expr("3/2*a1*x1*u(1,3) - w(1,3)*x2", 3)));
  EXPECT_TRUE(std::holds_alternative<Poly>(parse_expr("x1*y2 - 1", 2)));
  EXPECT_TRUE(std::holds_alternative<WreathElement>(parse_expr("a1*y1 - b1*x1", 1)));
  EXPECT_TRUE(std::holds_alternative<WreathElement>(parse_expr("[a1, q1]", 1)));
}

TEST(Parser, ScalarValue) {
  const FormalScalar u = std::get<FormalScalar>(parse_expr("u(1,2)", 2));
  EXPECT_EQ(u, FormalScalar::of(2, ConstantWord({}, {UGen(1, 2)})));
  EXPECT_EQ(parse_scalar("u(2,1)", 2), FormalScalar::of(2, ConstantWord({}, {UGen(1, 2)}), -1));
  EXPECT_TRUE(parse_scalar("u(2,2)*x1", 2).is_zero());
  EXPECT_EQ(parse_scalar("x1^2 * x2", 2), FormalScalar::of(2, ConstantWord({1, 1, 2}, {})));
}

TEST(Parser, MixedScalarAndModule) {
  // x1*u(1,3) has no head, so this is not a module element.
  EXPECT_THROW(parse_module("3/2*x1*u(1,3) - w(1,3)*x2", 3), ParseError);
  const FormalModuleElement m = parse_module("3/2*a1*x1*u(1,3) - w(1,3)*x2", 3);
  FormalModuleElement want(3);
  want.add(ModuleWord{AHead{1}, ConstantWord({1}, {UGen(1, 3)})}, Rational(3, 2));
  want.add(ModuleWord{WGen{1, 3}, ConstantWord({2}, {})}, -1);
  EXPECT_EQ(m, want);
  EXPECT_THROW(parse_module("a1*w(1,2)", 2), ParseError);
}

TEST(Parser, LieValue) {
  const LieExpr e = parse_lie("[x1,y2]+[x2,y1]", 2);
  EXPECT_EQ(e.terms().size(), 2u);
  EXPECT_EQ(to_string(e), "[x1,y2] + [x2,y1]");
  EXPECT_EQ(embed(parse_lie("[x1,y1,x2]", 2)), embed(parse_lie("[[x1,y1],x2]", 2)));
  EXPECT_EQ(embed(parse_lie("[x1,y1]*x2", 2)), embed(parse_lie("[x1,y1,x2]", 2)));
  EXPECT_EQ(embed(parse_lie("[x1 + 2*y1, x2]", 2)),
            embed(parse_lie("[x1,x2] + 2*[y1,x2]", 2)));
  EXPECT_THROW(parse_lie("[x1,y1]*[x1,y2]", 2), ParseError);
  EXPECT_THROW(parse_lie("[x1*y1, x2]", 2), ParseError);
}

TEST(Parser, WreathValue) {
  const int d = 2;
  EXPECT_EQ(parse_wreath("[x1,y2]", d), embed(parse_lie("[x1,y2]", d)));
  EXPECT_EQ(parse_wreath("w(1,2)", d), expand_w(d, WGen{1, 2}));
  EXPECT_EQ(parse_wreath("a1*u(1,2)", d), module_action(WreathElement::module(d, agen(1)), expand_u(d, UGen(1, 2))));
  EXPECT_EQ(parse_wreath("[a1*x2, p1]", d), WreathElement::module(agen(1), Poly::x(d, 2) * Poly::x(d, 1)));
  EXPECT_EQ(parse_wreath("2*p1 - q2", d), WreathElement::linear(d, pgen(1), 2) - WreathElement::linear(d, qgen(2)));
  EXPECT_THROW(parse_wreath("p1*x1", d), ParseError);
  EXPECT_THROW(parse_wreath("x1", d), ParseError);
}

TEST(Parser, ErrorsCarryPositions) {
  try {
    parse_expr("x1 +\n  * y1", 1);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 3);
  }
  EXPECT_THROW(parse_expr("u(1,2", 2), ParseError);
  EXPECT_THROW(parse_expr("[x1]", 2), ParseError);
  EXPECT_THROW(parse_expr("x", 2), ParseError);
  EXPECT_THROW(parse_expr("1/0", 2), ParseError);
  EXPECT_THROW(parse_expr("x1 y1", 2), ParseError);
  EXPECT_THROW(parse_expr("x3", 2), DomainError);
  EXPECT_THROW(parse_expr("u(1,5)", 4), DomainError);
  EXPECT_THROW(parse_expr("x1", 0), ConfigError);
}

TEST(Parser, WhitespaceIsInsignificant) {
  EXPECT_EQ(parse_poly(" x1 * y2\t-\n3 / 4 ", 2), parse_poly("x1*y2-3/4", 2));
  EXPECT_EQ(parse_poly("-(x1 - y1)^2", 1), parse_poly("-x1^2 + 2*x1*y1 - y1^2", 1));
}

TEST(Parser, RoundTripOfPrintedValues) {
  mt::Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = mt::uniform(rng, 1, 4);
    const Poly p = mt::random_poly(rng, d);
    EXPECT_EQ(parse_poly(to_string(p), d), p) << to_string(p);
    const FormalScalar s = straighten_scalar(mt::random_formal_scalar(rng, d));
    EXPECT_EQ(parse_scalar(to_string(s), d), s) << to_string(s);
    const FormalModuleElement m = straighten_module(mt::random_formal_module(rng, d));
    EXPECT_EQ(parse_module(to_string(m), d), m) << to_string(m);
    const WreathElement w = mt::random_wreath(rng, d);
    EXPECT_EQ(parse_wreath(to_string(w), d), w) << to_string(w);
    const LieExpr e = mt::random_lie(rng, d);
    EXPECT_EQ(embed(parse_lie(to_string(e), d)), embed(e)) << to_string(e);
  }
}
