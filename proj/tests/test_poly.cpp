#include <gtest/gtest.h>

#include "sextactica/fermat.hpp"
#include "sextactica/poly.hpp"

using namespace sextactica;

namespace {

const HomPoly X = HomPoly::variable(Var::x);
const HomPoly Y = HomPoly::variable(Var::y);
const HomPoly Z = HomPoly::variable(Var::z);

HomPoly c(long v) { return HomPoly::constant(FieldElement(v)); }

}  // namespace

TEST(Poly, SubtractionCancels) {
  const HomPoly f = fermat_cubic();
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_FALSE((f - f).degree().has_value());
}

TEST(Poly, ProductOfVariables) {
  const HomPoly p = X * Y * Z;
  EXPECT_EQ(p, HomPoly::monomial(1, 1, 1, 1));
  EXPECT_EQ(p.term_count(), 1u);
  EXPECT_EQ(*p.degree(), 3);
}

TEST(Poly, InhomogeneousSumThrows) {
  EXPECT_THROW(X + X * Y, DegreeMismatch);
  EXPECT_THROW(X - c(1), DegreeMismatch);
  EXPECT_EQ(X + HomPoly(), X);
}

// Six terms, not fifteen: the expansion of (x^3-y^3)(y^3-z^3)(z^3-x^3).
TEST(Poly, WitnessExpansion) {
  const HomPoly w = dual_hesse_witness();
  EXPECT_EQ(w, (X * X * X - Y * Y * Y) * (Y * Y * Y - Z * Z * Z) * (Z * Z * Z - X * X * X));
  EXPECT_EQ(*w.degree(), 9);
  EXPECT_EQ(w.term_count(), 6u);
  for (const auto& [e, a] : w.terms()) EXPECT_EQ(a.classify(), FieldClass::rational_integer);
  EXPECT_EQ(w.coefficient({6, 3, 0}), FieldElement(-1));
  EXPECT_EQ(w.coefficient({3, 6, 0}), FieldElement(1));
}

TEST(Poly, Derivatives) {
  const HomPoly f = fermat_cubic();
  EXPECT_EQ(f.derivative(Var::x), HomPoly::monomial(3, 2, 0, 0));
  EXPECT_TRUE((X * Y * Z).derivative(Var::x).derivative(Var::x).is_zero());
  HomPoly euler = X * f.derivative(Var::x) + Y * f.derivative(Var::y) + Z * f.derivative(Var::z);
  EXPECT_EQ(euler, f.scaled(FieldElement(3)));
}

TEST(Poly, DeterminantBasics) {
  PolyMatrix id{{c(1), HomPoly(), HomPoly()}, {HomPoly(), c(1), HomPoly()}, {HomPoly(), HomPoly(), c(1)}};
  EXPECT_EQ(det(id), c(1));
  PolyMatrix twin{{X, Y, Z}, {X, Y, Z}, {c(1), c(2), c(3)}};
  EXPECT_TRUE(det(twin).is_zero());
  PolyMatrix four(4, 4);
  for (std::size_t i = 0; i < 4; ++i) four(i, i) = X;
  EXPECT_EQ(det(four), HomPoly::monomial(1, 4, 0, 0));
  EXPECT_THROW(PolyMatrix(2, 2), BadDimension);
  EXPECT_THROW(det(PolyMatrix(3, 4)), BadDimension);
}

TEST(Poly, HessianDeterminantOfFermat) {
  const HomPoly f = fermat_cubic();
  const auto g = f.gradient();
  PolyMatrix h(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) h(i, j) = g[i].derivative(kVars[j]);
  EXPECT_EQ(det(h), HomPoly::monomial(216, 1, 1, 1));
}

TEST(Poly, Evaluate) {
  const HomPoly f = fermat_cubic();
  EXPECT_TRUE(f.evaluate(ProjPoint(FieldElement(1), FieldElement(-1), FieldElement())).is_zero());
  const FieldElement mu = FieldElement::mu();
  EXPECT_TRUE(f.evaluate(ProjPoint(FieldElement(1), -mu, FieldElement(1))).is_zero());
  EXPECT_TRUE((X * Y * Z).evaluate(Vec3{FieldElement(1), FieldElement(1), FieldElement(1)}).is_one());
}

TEST(Poly, EvaluateScalesWithDegree) {
  const HomPoly f = fermat_cubic() + HomPoly::monomial(FieldElement::eps(), 1, 1, 1);
  const Vec3 p{FieldElement(2), FieldElement::mu(), FieldElement(-1)};
  const FieldElement s = FieldElement(1) + FieldElement::eps() * FieldElement::mu();
  const Vec3 sp{p[0] * s, p[1] * s, p[2] * s};
  EXPECT_EQ(f.evaluate(sp), f.evaluate(p) * pow(s, 3));
}

TEST(Poly, Proportional) {
  const HomPoly xyz = X * Y * Z;
  auto lam = proportional(xyz.scaled(FieldElement(2)), xyz);
  ASSERT_TRUE(lam);
  EXPECT_EQ(*lam, FieldElement(2));
  EXPECT_FALSE(proportional(xyz, X * X * Y));
  EXPECT_FALSE(proportional(xyz, X * Y * Z + X * X * Y));
  auto inv = proportional(xyz, xyz.scaled(FieldElement(2)));
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv * *lam, FieldElement(1));
}

TEST(Poly, VanishingOrder) {
  EXPECT_EQ(vanishing_order(X * Y * Z, ProjPoint(FieldElement(1), FieldElement(1), FieldElement(1))), 0);
  EXPECT_EQ(vanishing_order(X * X * Y, ProjPoint(FieldElement(), FieldElement(), FieldElement(1))), 3);
  EXPECT_EQ(vanishing_order(X * Y, ProjPoint(FieldElement(1), FieldElement(), FieldElement())), 1);
}

TEST(Poly, TextRoundTrip) {
  const HomPoly p = fermat_cubic() - HomPoly::monomial(FieldElement::eps().scaled(Rational(1, 3)), 1, 1, 1);
  const std::string t = p.to_text();
  EXPECT_EQ(HomPoly::parse(t), p);
  EXPECT_EQ(HomPoly::parse("x^3 + y^3 + z^3"), fermat_cubic());
  EXPECT_EQ(HomPoly::parse("2*x*y - 3*z^2"), (X * Y).scaled(FieldElement(2)) - (Z * Z).scaled(FieldElement(3)));
  EXPECT_THROW(HomPoly::parse("x^2 + y"), ParseError);
  EXPECT_EQ(HomPoly::parse("-x - [0/1,1/1,0/1,0/1,0/1,0/1]*y"), -X - Y.scaled(FieldElement::eps()));
  EXPECT_THROW(HomPoly::parse("x^^2"), ParseError);
}

TEST(Poly, GradedOrderIsDeterministic) {
  const HomPoly p = HomPoly::parse("z^2 + x*y + x^2");
  EXPECT_EQ(p.to_text(), "1*x^2*y^0*z^0 + 1*x^1*y^1*z^0 + 1*x^0*y^0*z^2");
}
