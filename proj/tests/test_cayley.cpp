#include <gtest/gtest.h>

#include "sextactica/cayley.hpp"
#include "sextactica/fermat.hpp"

using namespace sextactica;

namespace {

const HomPoly X = HomPoly::variable(Var::x);
const HomPoly Y = HomPoly::variable(Var::y);
const HomPoly Z = HomPoly::variable(Var::z);

HomPoly quartic() { return HomPoly::parse("x^4 + y^4 + z^4 + x*y*z^2"); }

const FieldElement kLambda = FieldElement(Rational("-65303470080"));

}  // namespace

TEST(Cayley, HessianOfFermat) {
  const auto b = hessian(fermat_cubic());
  EXPECT_EQ(b.h, HomPoly::monomial(216, 1, 1, 1));
  EXPECT_EQ(*b.h.degree(), 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(b.hess_h_matrix(i, j).is_zero(), i == j);
}

TEST(Cayley, HessianOfSmoothConicIsConstant) {
  const auto b = hessian(X * X + Y * Y + Z * Z);
  EXPECT_EQ(b.h, HomPoly::constant(8));
  EXPECT_EQ(*b.h.degree(), 0);
}

TEST(Cayley, HessianOfXyz) {
  const auto b = hessian(X * Y * Z);
  auto lam = proportional(b.h, X * Y * Z);
  ASSERT_TRUE(lam);
  EXPECT_EQ(*lam, FieldElement(2));
}

TEST(Cayley, DegreeGuards) {
  EXPECT_THROW(hessian(X + Y), DegreeTooLow);
  EXPECT_THROW(second_hessian(X * Y), DegreeTooLow);
}

TEST(Cayley, AdjugateOrderLocked) {
  const HomPoly g = HomPoly::parse("x^3 + 2*x^2*y + 3*y^2*z + 5*x*z^2 + 7*y^3");
  const auto b = hessian(g);
  const auto& m = b.hess_matrix;
  const std::array<HomPoly, 6> expect{
      m(1, 1) * m(2, 2) - m(1, 2) * m(1, 2), m(0, 0) * m(2, 2) - m(0, 2) * m(0, 2),
      m(0, 0) * m(1, 1) - m(0, 1) * m(0, 1), m(0, 1) * m(0, 2) - m(0, 0) * m(1, 2),
      m(0, 1) * m(1, 2) - m(1, 1) * m(0, 2), m(0, 2) * m(1, 2) - m(2, 2) * m(0, 1),
  };
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(b.adjugate_vector[i], expect[i]) << "entry " << i;
  const auto col = b.h_column();
  EXPECT_EQ(col[3], b.hess_h_matrix(1, 2).scaled(FieldElement(2)));
  EXPECT_EQ(col[5], b.hess_h_matrix(0, 1).scaled(FieldElement(2)));
}

TEST(Cayley, WeightsForCubic) {
  const auto w = SecondHessianWeights::for_degree(3);
  EXPECT_EQ(w.omega_h, 3);
  EXPECT_EQ(w.omega_gamma, 9);
  EXPECT_EQ(w.psi, 20);
  EXPECT_EQ(SecondHessianWeights::for_degree(3, 40).psi, 40);
  EXPECT_EQ(SecondHessianWeights::for_degree(4).psi, 80);
}

// Hess(H) of F has a zero diagonal and the adjugate of diag(6x, 6y, 6z) has
// zero off-diagonal cofactors, so Omega(F) vanishes identically.
TEST(Cayley, OmegaPartsForFermat) {
  const auto parts = second_hessian(fermat_cubic());
  EXPECT_TRUE(parts.omega.is_zero());
  for (const auto& p : parts.omega_gamma_grad) EXPECT_TRUE(p.is_zero());
  for (const auto& p : parts.omega_h_grad) EXPECT_TRUE(p.is_zero());
  const auto g = parts.omega.gradient();
  for (std::size_t u = 0; u < 3; ++u) EXPECT_EQ(g[u], parts.omega_gamma_grad[u] + parts.omega_h_grad[u]);
  ASSERT_FALSE(parts.psi.is_zero());
  EXPECT_EQ(*parts.psi.degree(), 6);
}

TEST(Cayley, PsiVanishesForConics) {
  EXPECT_TRUE(psi(hessian(X * X + Y * Y + Z * Z)).is_zero());
  EXPECT_TRUE(psi(hessian(X * Y + Z * Z)).is_zero());
}

TEST(Cayley, SecondHessianOfFermat) {
  const auto parts = second_hessian(fermat_cubic());
  ASSERT_FALSE(parts.h2.is_zero());
  EXPECT_EQ(*parts.h2.degree(), 9);
  auto lam = proportional(parts.h2, dual_hesse_witness());
  ASSERT_TRUE(lam);
  EXPECT_EQ(*lam, kLambda);
  EXPECT_EQ(proportional(parts.h2, product_of_lines(dual_hesse_lines())).has_value(), true);
}

// For any cubic Jac(G, H, Omega_G) and Jac(G, H, Omega_H) vanish, so the
// historical coefficient only rescales H2. This is a recorded fact, not a
// defect: the mutated formula stays proportional on F.
TEST(Cayley, HistoricalCoefficientOnCubicOnlyRescales) {
  const auto h40 = second_hessian(fermat_cubic(), 40).h2;
  auto lam = proportional(h40, dual_hesse_witness());
  ASSERT_TRUE(lam);
  EXPECT_EQ(*lam, kLambda * FieldElement(2));
  const HomPoly g = HomPoly::parse("x^3 + y^3 + z^3 + 2*x*y*z + x^2*y");
  const auto b = hessian(g);
  const auto parts = omega_products(b);
  EXPECT_TRUE(jacobian(g, b.h, parts.omega_h_grad).is_zero());
  EXPECT_TRUE(jacobian(g, b.h, parts.omega_gamma_grad).is_zero());
}

TEST(Cayley, QuarticDegreeAndMutation) {
  const auto parts = second_hessian(quartic());
  ASSERT_FALSE(parts.h2.is_zero());
  EXPECT_EQ(*parts.h2.degree(), 21);
  EXPECT_EQ(parts.h2.term_count(), 46u);
  EXPECT_EQ(*hessian(quartic()).h.degree(), 6);
  ASSERT_FALSE(parts.omega.is_zero());
  EXPECT_EQ(*parts.omega.degree(), 2 * (4 - 2) + 3 * (4 - 2) - 2);
  const auto g = parts.omega.gradient();
  for (std::size_t u = 0; u < 3; ++u) EXPECT_EQ(g[u], parts.omega_gamma_grad[u] + parts.omega_h_grad[u]);
  EXPECT_FALSE(proportional(second_hessian(quartic(), 40).h2, parts.h2).has_value());
}

TEST(Cayley, JacobianAlternates) {
  const HomPoly f = fermat_cubic();
  EXPECT_TRUE(jacobian(f, f, X * Y * Z).is_zero());
  EXPECT_TRUE(jacobian(f, X * Y * Z, f).is_zero());
}

TEST(Cayley, ExtendedFermatProduct) {
  const HomPoly e = extended_fermat_product(fermat_cubic());
  EXPECT_EQ(*e.degree(), 12);
  EXPECT_TRUE(proportional(e, X * Y * Z * dual_hesse_witness()).has_value());
  for (const auto& p : reference::flex_points()) EXPECT_TRUE(e.evaluate(p).is_zero());
  for (const auto& p : reference::sextactic_points()) EXPECT_TRUE(e.evaluate(p).is_zero());
}
