#include <gtest/gtest.h>

#include <set>

#include "sextactica/conic.hpp"
#include "sextactica/fermat.hpp"

using namespace sextactica;

namespace {

const FieldElement kOne(1), kZero;
const FieldElement kEps = FieldElement::eps();
const FieldElement kMu = FieldElement::mu();

template <class T>
bool contains(const std::vector<T>& v, const T& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

TEST(Flexes, ComputedFromCurveEquations) {
  const auto pts = flex_points();
  ASSERT_EQ(pts.size(), 9u);
  EXPECT_EQ(pts.front(), ProjPoint(kOne, -kOne, kZero));
  const auto f = fermat_cubic();
  const auto h = hessian(f).h;
  for (const auto& p : pts) {
    EXPECT_TRUE(f.evaluate(p).is_zero());
    EXPECT_TRUE(h.evaluate(p).is_zero());
  }
  for (std::size_t k = 0; k < 3; ++k)
    EXPECT_EQ(std::count_if(pts.begin(), pts.end(), [k](const ProjPoint& p) { return p[k].is_zero(); }), 3);
}

TEST(Flexes, HesseArrangement) {
  const auto flexes = flex_points();
  const auto lines = hesse_lines(flexes);
  ASSERT_EQ(lines.size(), 12u);
  EXPECT_TRUE(contains(lines, Line(kOne, kZero, kZero)));
  EXPECT_TRUE(contains(lines, Line(kOne, kEps, kOne)));
  const auto s = summarize_arrangement(lines, flexes);
  EXPECT_EQ(s.signature, "(12_3, 9_4)");
  EXPECT_EQ(s.incidences(), 36u);
}

TEST(Flexes, DualHesseTriplePoints) {
  const auto pts = dual_hesse_triple_points();
  ASSERT_EQ(pts.size(), 12u);
  const auto s = summarize_arrangement(dual_hesse_lines(), pts);
  EXPECT_EQ(s.signature, "(9_4, 12_3)");
  const HomPoly w = dual_hesse_witness();
  for (const auto& p : pts) EXPECT_EQ(vanishing_order(w, p), 3) << p.to_pretty();
}

TEST(Flexes, BinomialSectionRejectsGenericLines) {
  EXPECT_THROW(binomial_line_section(fermat_cubic(), Line(kOne, FieldElement(2), FieldElement(3))), NonBinomial);
}

TEST(Sextactic, ComputedFromSecondHessian) {
  const auto pts = sextactic_points();
  ASSERT_EQ(pts.size(), 27u);
  EXPECT_EQ(std::set<ProjPoint>(pts.begin(), pts.end()).size(), 27u);
  EXPECT_EQ(pts[10], ProjPoint(kOne, -kMu, kOne));
  const FieldElement h = (kMu * kMu).scaled(Rational(-1, 2));
  EXPECT_EQ(pts[9], ProjPoint(h, h, kOne));
  const auto f = fermat_cubic();
  const auto h2 = second_hessian(f).h2;
  for (const auto& p : pts) {
    EXPECT_TRUE(f.evaluate(p).is_zero());
    EXPECT_TRUE(h2.evaluate(p).is_zero());
  }
}

TEST(Sextactic, ReferenceListLiesOnCurve) {
  const auto f = fermat_cubic();
  for (const auto& p : reference::sextactic_points()) EXPECT_TRUE(f.evaluate(p).is_zero()) << p.to_pretty();
  for (const auto& p : reference::flex_points()) EXPECT_TRUE(f.evaluate(p).is_zero()) << p.to_pretty();
}

TEST(ConicThrough, TwoCoordinateLines) {
  const auto flexes = flex_points();
  // P4..P6 on y = 0, P7..P9 on x = 0
  std::vector<ProjPoint> six(flexes.begin() + 3, flexes.end());
  const auto fit = conic_through(six);
  ASSERT_EQ(fit.kind, ConicFit::Kind::unique);
  EXPECT_EQ(fit.conic->to_poly(), HomPoly::monomial(1, 1, 1, 0));
  const auto cls = conic_classify(*fit.conic, six);
  EXPECT_EQ(cls.kind, ConicKind::two_lines);
  ASSERT_EQ(cls.lines.size(), 2u);
  EXPECT_TRUE(contains(cls.lines, Line(kOne, kZero, kZero)));
  EXPECT_TRUE(contains(cls.lines, Line(kZero, kOne, kZero)));
}

TEST(ConicThrough, NoConic) {
  std::vector<ProjPoint> six;
  for (long t : {0, 1, 2, 3, 4}) six.emplace_back(FieldElement(1), FieldElement(t), FieldElement(t * t * t));
  six.emplace_back(kZero, kZero, kOne);
  const auto fit = conic_through(six);
  EXPECT_EQ(fit.kind, ConicFit::Kind::none);
  EXPECT_EQ(fit.kernel_dim, 0u);
}

TEST(ConicThrough, PencilAndDuplicates) {
  std::vector<ProjPoint> four{ProjPoint(kOne, kZero, kZero), ProjPoint(kZero, kOne, kZero), ProjPoint(kZero, kZero, kOne),
                              ProjPoint(kOne, kOne, kOne)};
  EXPECT_EQ(conic_through(four).kind, ConicFit::Kind::pencil);
  four.push_back(four.front());
  EXPECT_THROW(conic_through(four), DuplicatePoints);
}

TEST(ConicThrough, SixSextacticPointsOnConic) {
  const auto pts = sextactic_points();
  bool found = false;
  for (std::size_t k = 5; k < pts.size() && !found; ++k) {
    std::vector<ProjPoint> six{pts[0], pts[1], pts[2], pts[3], pts[4], pts[k]};
    const auto fit = conic_through(six);
    if (fit.kind != ConicFit::Kind::unique) continue;
    found = true;
    for (const auto& p : six) EXPECT_TRUE(fit.conic->contains(p));
  }
  EXPECT_TRUE(found);
}

TEST(ConicClassify, Ranks) {
  const auto smooth = Conic({kOne, kOne, kOne, kZero, kZero, kZero});
  EXPECT_EQ(conic_classify(smooth).kind, ConicKind::smooth);
  EXPECT_EQ(conic_classify(smooth).rank, 3);
  const auto pair = Conic({kZero, kZero, kZero, kOne, kZero, kZero});
  const auto cls = conic_classify(pair);
  EXPECT_EQ(cls.kind, ConicKind::two_lines);
  ASSERT_EQ(cls.lines.size(), 2u);
  EXPECT_TRUE(contains(cls.lines, Line(kOne, kZero, kZero)));
  EXPECT_TRUE(contains(cls.lines, Line(kZero, kOne, kZero)));
  const auto dbl = Conic({kOne, kZero, kZero, kZero, kZero, kZero});
  EXPECT_EQ(conic_classify(dbl).kind, ConicKind::double_line);
  EXPECT_EQ(conic_classify(dbl).rank, 1);
}

TEST(ConicClassify, SplitsIrrationalLinePair) {
  // (x - mu y)(x + eps z) without hints
  const HomPoly l1 = HomPoly::linear(Vec3{kOne, -kMu, kZero});
  const HomPoly l2 = HomPoly::linear(Vec3{kOne, kZero, kEps});
  const HomPoly q = l1 * l2;
  ConicCoeffs c{q.coefficient({2, 0, 0}), q.coefficient({0, 2, 0}), q.coefficient({0, 0, 2}),
                q.coefficient({1, 1, 0}), q.coefficient({1, 0, 1}), q.coefficient({0, 1, 1})};
  const auto cls = conic_classify(Conic(c));
  ASSERT_EQ(cls.kind, ConicKind::two_lines);
  ASSERT_EQ(cls.lines.size(), 2u);
  EXPECT_TRUE(contains(cls.lines, Line(kOne, -kMu, kZero)));
  EXPECT_TRUE(contains(cls.lines, Line(kOne, kZero, kEps)));
}

TEST(Projective, NormalizationIsCanonical) {
  const ProjPoint p(FieldElement(2), kMu, FieldElement(4));
  EXPECT_TRUE(p[2].is_one());
  EXPECT_EQ(ProjPoint(FieldElement(1), kMu.scaled(Rational(1, 2)), FieldElement(2)), p);
  EXPECT_THROW(ProjPoint(kZero, kZero, kZero), Error);
  const Line l = line_through(ProjPoint(kOne, kZero, kZero), ProjPoint(kZero, kOne, kZero));
  EXPECT_EQ(l, Line(kZero, kZero, kOne));
  EXPECT_EQ(meet(Line(kOne, kZero, kZero), Line(kZero, kOne, kZero)), ProjPoint(kZero, kZero, kOne));
}
