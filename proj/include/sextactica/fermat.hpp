#pragma once

// Flexes, flex lines and sextactic points of the Fermat cubic
// F = x^3 + y^3 + z^3, computed from the curve equations, plus the reference
// coordinate lists used to fix the P/L/S numbering.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sextactica/cayley.hpp"
#include "sextactica/poly.hpp"
#include "sextactica/projective.hpp"

namespace sextactica {

struct ArrangementSummary {
  std::size_t line_count = 0;
  std::size_t point_count = 0;
  // value -> how many lines (resp. points) have that value
  std::map<std::size_t, std::size_t> points_per_line;
  std::map<std::size_t, std::size_t> lines_per_point;
  std::string signature;

  std::size_t incidences() const {
    std::size_t n = 0;
    for (auto [k, m] : points_per_line) n += k * m;
    return n;
  }
};

/// Incidence structure of lines against points. The signature reads
/// "(L_a, P_b)" when every line carries a points and every point lies on b
/// lines, and "irregular" otherwise.
inline ArrangementSummary summarize_arrangement(const std::vector<Line>& lines, const std::vector<ProjPoint>& points) {
  ArrangementSummary s;
  s.line_count = lines.size();
  s.point_count = points.size();
  std::vector<std::size_t> per_point(points.size(), 0);
  for (const auto& l : lines) {
    std::size_t on = 0;
    for (std::size_t i = 0; i < points.size(); ++i)
      if (incident(l, points[i])) {
        ++on;
        ++per_point[i];
      }
    ++s.points_per_line[on];
  }
  for (auto n : per_point) ++s.lines_per_point[n];
  if (s.points_per_line.size() == 1 && s.lines_per_point.size() == 1)
    s.signature = "(" + std::to_string(s.line_count) + "_" + std::to_string(s.points_per_line.begin()->first) + ", " +
                  std::to_string(s.point_count) + "_" + std::to_string(s.lines_per_point.begin()->first) + ")";
  else
    s.signature = "irregular";
  return s;
}

/// Intersection of a line with a cubic whose restriction to the line is a
/// binomial a s^3 + b t^3. Points are returned with multiplicity.
inline std::vector<ProjPoint> binomial_line_section(const HomPoly& cubic, const Line& line) {
  if (cubic.degree() != 3) throw NonBinomial("binomial section needs a cubic");
  const auto& l = line.coords();
  std::size_t k = 3;
  while (k-- > 0)
    if (!l[k].is_zero()) break;
  // l[k] == 1 after normalization; parametrize by the two other unit vectors.
  std::vector<Vec3> basis;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i == k) continue;
    Vec3 u{};
    u[i] = 1;
    u[k] = -l[i];
    basis.push_back(u);
  }
  const Vec3 &p0 = basis[0], &p1 = basis[1];
  const auto grad = cubic.gradient();
  auto directional = [&](const Vec3& at, const Vec3& dir) {
    return grad[0].evaluate(at) * dir[0] + grad[1].evaluate(at) * dir[1] + grad[2].evaluate(at) * dir[2];
  };
  // cubic(s p0 + t p1) = c0 s^3 + c1 s^2 t + c2 s t^2 + c3 t^3
  FieldElement c0 = cubic.evaluate(p0), c3 = cubic.evaluate(p1);
  FieldElement c1 = directional(p0, p1), c2 = directional(p1, p0);
  if (!c1.is_zero() || !c2.is_zero()) throw NonBinomial("line section is not binomial: " + line.to_pretty());
  if (c0.is_zero() && c3.is_zero()) throw Error("line is a component of the cubic");
  if (c0.is_zero()) return {ProjPoint(p0), ProjPoint(p0), ProjPoint(p0)};
  if (c3.is_zero()) return {ProjPoint(p1), ProjPoint(p1), ProjPoint(p1)};
  // (s/t)^3 = -c3/c0
  const FieldElement root = real_cube_root(-c3 / c0);
  std::vector<ProjPoint> out;
  FieldElement unit(1);
  for (int j = 0; j < 3; ++j, unit = unit * FieldElement::eps()) {
    FieldElement s = root * unit;
    out.emplace_back(Vec3{s * p0[0] + p1[0], s * p0[1] + p1[1], s * p0[2] + p1[2]});
  }
  return out;
}

namespace reference {

inline const FieldElement& eps() {
  static const FieldElement e = FieldElement::eps();
  return e;
}
inline const FieldElement& eps2() {
  static const FieldElement e = FieldElement::eps() * FieldElement::eps();
  return e;
}

/// P1..P9 as listed for the Fermat cubic.
inline std::vector<ProjPoint> flex_points() {
  const FieldElement one(1), zero, e = eps(), e2 = eps2();
  return {
      ProjPoint(one, -one, zero), ProjPoint(one, -e, zero), ProjPoint(one, -e2, zero),
      ProjPoint(one, zero, -one), ProjPoint(one, zero, -e), ProjPoint(one, zero, -e2),
      ProjPoint(zero, one, -one), ProjPoint(zero, one, -e), ProjPoint(zero, one, -e2),
  };
}

/// L1..L12, the Hesse arrangement.
inline std::vector<Line> hesse_lines() {
  const FieldElement one(1), zero, e = eps(), e2 = eps2();
  return {
      Line(one, zero, zero), Line(zero, one, zero), Line(zero, zero, one),
      Line(one, one, one),   Line(one, e, one),     Line(one, e2, one),
      Line(one, one, e),     Line(one, one, e2),    Line(one, e, e),
      Line(one, e, e2),      Line(one, e2, e),      Line(one, e2, e2),
  };
}

/// S1..S27, with mu the real cube root of 2.
inline std::vector<ProjPoint> sextactic_points() {
  const FieldElement one(1), e = eps(), m = FieldElement::mu(), m2 = m * m;
  const Rational h(1, 2);
  const FieldElement e1 = e + one;  // eps + 1
  auto half = [&](const FieldElement& a) { return a.scaled(h); };
  return {
      ProjPoint(-half(e * m2), -half(e * m2), one),  // S1
      ProjPoint(one, e1 * m, one),                   // S2
      ProjPoint(e1 * m, one, one),                   // S3
      ProjPoint(half(e1 * m2), -half(m2), one),      // S4
      ProjPoint(e, -(e * m), one),                   // S5
      ProjPoint(-m, -e - one, one),                  // S6
      ProjPoint(-half(m2), half(e1 * m2), one),      // S7
      ProjPoint(-e - one, -m, one),                  // S8
      ProjPoint(-(e * m), e, one),                   // S9
      ProjPoint(-half(m2), -half(m2), one),          // S10
      ProjPoint(one, -m, one),                       // S11
      ProjPoint(-m, one, one),                       // S12
      ProjPoint(-half(e * m2), half(e1 * m2), one),  // S13, first coordinate negative
      ProjPoint(e, e1 * m, one),                     // S14
      ProjPoint(-(e * m), -e - one, one),            // S15
      ProjPoint(half(e1 * m2), -half(e * m2), one),  // S16
      ProjPoint(-e - one, -(e * m), one),            // S17
      ProjPoint(e1 * m, e, one),                     // S18
      ProjPoint(half(e1 * m2), half(e1 * m2), one),  // S19
      ProjPoint(one, -(e * m), one),                 // S20
      ProjPoint(-(e * m), one, one),                 // S21
      ProjPoint(-half(m2), -half(e * m2), one),      // S22
      ProjPoint(e, -m, one),                         // S23
      ProjPoint(e1 * m, -e - one, one),              // S24
      ProjPoint(-half(e * m2), -half(m2), one),      // S25
      ProjPoint(-e - one, e1 * m, one),              // S26
      ProjPoint(-m, e, one),                         // S27
  };
}

}  // namespace reference

/// Reorders `computed` to follow `ref`; throws unless the two agree as sets.
template <class T>
std::vector<T> match_reference_order(const std::vector<T>& computed, const std::vector<T>& ref, const char* what) {
  std::set<T> a(computed.begin(), computed.end()), b(ref.begin(), ref.end());
  if (a.size() != computed.size()) throw Error(std::string(what) + ": computed list has duplicates");
  if (a != b) throw Error(std::string(what) + ": computed set differs from the reference list");
  return ref;
}

inline HomPoly xyz_monomial() { return HomPoly::monomial(1, 1, 1, 1); }

/// The nine factors x - eps^j y, y - eps^j z, z - eps^j x of the witness.
inline std::vector<Line> dual_hesse_lines() {
  std::vector<Line> out;
  FieldElement unit(1);
  for (int j = 0; j < 3; ++j, unit = unit * FieldElement::eps()) {
    out.emplace_back(FieldElement(1), -unit, FieldElement());
    out.emplace_back(FieldElement(), FieldElement(1), -unit);
    out.emplace_back(-unit, FieldElement(), FieldElement(1));
  }
  std::sort(out.begin(), out.end(), KeyLess{});
  return out;
}

inline HomPoly product_of_lines(const std::vector<Line>& lines) {
  HomPoly p = HomPoly::constant(1);
  for (const auto& l : lines) p = p * HomPoly::linear(l.coords());
  return p;
}

/// Common zeros of F and its Hessian, in P1..P9 order. The Hessian is
/// checked to split as xyz; each coordinate line meets F in a binomial cubic.
inline std::vector<ProjPoint> flex_points() {
  const HomPoly f = fermat_cubic();
  const HomPoly h = hessian(f).h;
  if (!proportional(h, xyz_monomial())) throw Error("H(F) is not proportional to xyz");
  std::vector<ProjPoint> pts;
  for (std::size_t k = 0; k < 3; ++k) {
    Vec3 l{};
    l[k] = 1;
    auto sec = binomial_line_section(f, Line(l));
    pts.insert(pts.end(), sec.begin(), sec.end());
  }
  return match_reference_order(pts, reference::flex_points(), "flex points");
}

/// All lines through two flexes, in L1..L12 order.
inline std::vector<Line> hesse_lines(const std::vector<ProjPoint>& flexes) {
  std::set<Line> lines;
  for (std::size_t i = 0; i < flexes.size(); ++i)
    for (std::size_t j = i + 1; j < flexes.size(); ++j) lines.insert(line_through(flexes[i], flexes[j]));
  return match_reference_order(std::vector<Line>(lines.begin(), lines.end()), reference::hesse_lines(), "Hesse lines");
}

/// The pairwise intersection points of the dual Hesse lines, canonically sorted.
inline std::vector<ProjPoint> dual_hesse_triple_points() {
  const auto lines = dual_hesse_lines();
  std::set<ProjPoint> pts;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) pts.insert(meet(lines[i], lines[j]));
  std::vector<ProjPoint> out(pts.begin(), pts.end());
  std::sort(out.begin(), out.end(), KeyLess{});
  return out;
}

/// F intersected with the nine linear factors of H2(F), in S1..S27 order.
/// `h2` must be proportional to the product of the dual Hesse lines.
inline std::vector<ProjPoint> sextactic_points(const HomPoly& h2) {
  const auto lines = dual_hesse_lines();
  if (!proportional(h2, product_of_lines(lines))) throw Error("H2(F) does not split into the dual Hesse lines");
  const HomPoly f = fermat_cubic();
  std::vector<ProjPoint> pts;
  for (const auto& l : lines) {
    auto sec = binomial_line_section(f, l);
    pts.insert(pts.end(), sec.begin(), sec.end());
  }
  return match_reference_order(pts, reference::sextactic_points(), "sextactic points");
}

inline std::vector<ProjPoint> sextactic_points() { return sextactic_points(second_hessian(fermat_cubic()).h2); }

inline std::string point_label(char prefix, std::size_t index) { return std::string(1, prefix) + std::to_string(index + 1); }

}  // namespace sextactica
