#pragma once

// Plane conics A x^2 + B y^2 + C z^2 + D xy + E xz + F yz over K.

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sextactica/linalg.hpp"
#include "sextactica/poly.hpp"
#include "sextactica/projective.hpp"

namespace sextactica {

using ConicCoeffs = RowK<6>;

/// (x^2, y^2, z^2, xy, xz, yz) at p.
inline ConicCoeffs conic_monomials(const Vec3& p) {
  return {p[0] * p[0], p[1] * p[1], p[2] * p[2], p[0] * p[1], p[0] * p[2], p[1] * p[2]};
}

class Conic {
 public:
  /// Normalizes so the first nonzero coefficient is 1.
  explicit Conic(ConicCoeffs c) {
    std::size_t i = 0;
    while (i < 6 && c[i].is_zero()) ++i;
    if (i == 6) throw Error("zero conic");
    if (!c[i].is_one()) {
      const FieldElement inv = c[i].inverse();
      for (std::size_t k = i; k < 6; ++k)
        if (!c[k].is_zero()) c[k] = c[k] * inv;
    }
    c_ = std::move(c);
  }

  const ConicCoeffs& coeffs() const { return c_; }

  FieldElement evaluate(const Vec3& p) const { return dot(c_, conic_monomials(p)); }
  FieldElement evaluate(const ProjPoint& p) const { return evaluate(p.coords()); }
  bool contains(const ProjPoint& p) const { return evaluate(p).is_zero(); }

  /// Symmetric matrix with x^T M x equal to the conic's quadratic form.
  std::array<Vec3, 3> sym_matrix() const {
    const Rational h(1, 2);
    const auto &A = c_[0], &B = c_[1], &C = c_[2];
    FieldElement D = c_[3].scaled(h), E = c_[4].scaled(h), F = c_[5].scaled(h);
    return {Vec3{A, D, E}, Vec3{D, B, F}, Vec3{E, F, C}};
  }

  /// Gradient of the quadratic form at p (up to the factor 2).
  Vec3 polar(const Vec3& p) const {
    auto m = sym_matrix();
    return {dot(m[0], p), dot(m[1], p), dot(m[2], p)};
  }

  HomPoly to_poly() const {
    HomPoly p;
    const std::array<Exponent, 6> mons{Exponent{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    for (std::size_t i = 0; i < 6; ++i) p += HomPoly::monomial(c_[i], mons[i][0], mons[i][1], mons[i][2]);
    return p;
  }

  friend bool operator==(const Conic&, const Conic&) = default;
  friend auto operator<=>(const Conic& a, const Conic& b) { return a.c_ <=> b.c_; }

 private:
  ConicCoeffs c_;
};

struct ConicFit {
  enum class Kind { none, unique, pencil };
  Kind kind = Kind::none;
  std::optional<Conic> conic;
  std::size_t kernel_dim = 0;
};

inline std::string to_string(ConicFit::Kind k) {
  switch (k) {
    case ConicFit::Kind::none: return "none";
    case ConicFit::Kind::unique: return "unique";
    case ConicFit::Kind::pencil: return "pencil";
  }
  return "?";
}

/// Conics through the given points, from the kernel of the monomial matrix.
inline ConicFit conic_through(std::span<const ProjPoint> points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j]) throw DuplicatePoints();
  EchelonBasis<6> basis;
  for (const auto& p : points) basis.add(conic_monomials(p.coords()));
  ConicFit fit;
  fit.kernel_dim = 6 - basis.rank();
  if (fit.kernel_dim == 0) return fit;
  if (fit.kernel_dim == 1) {
    fit.kind = ConicFit::Kind::unique;
    fit.conic = Conic(basis.kernel().front());
  } else {
    fit.kind = ConicFit::Kind::pencil;
  }
  return fit;
}

enum class ConicKind { smooth, two_lines, double_line };

inline std::string to_string(ConicKind k) {
  switch (k) {
    case ConicKind::smooth: return "smooth";
    case ConicKind::two_lines: return "two_lines";
    case ConicKind::double_line: return "double_line";
  }
  return "?";
}

struct ConicClassification {
  ConicKind kind = ConicKind::smooth;
  std::size_t rank = 3;
  // two_lines: both factors, canonically ordered. double_line: first only.
  std::vector<Line> lines;
};

namespace detail {

// The linear form m with l * m = q, when l divides q.
inline std::optional<Line> divide_conic_by_line(const Conic& q, const Line& l) {
  const auto& c = q.coeffs();
  const auto& p = l.coords();
  // l*m coefficients: x^2 p0 m0, y^2 p1 m1, z^2 p2 m2, xy p0 m1 + p1 m0,
  // xz p0 m2 + p2 m0, yz p1 m2 + p2 m1.
  Vec3 m;
  if (!p[0].is_zero()) {
    FieldElement inv = p[0].inverse();
    m[0] = c[0] * inv;
    m[1] = (c[3] - p[1] * m[0]) * inv;
    m[2] = (c[4] - p[2] * m[0]) * inv;
  } else if (!p[1].is_zero()) {
    FieldElement inv = p[1].inverse();
    m[1] = c[1] * inv;
    m[0] = c[3] * inv;
    m[2] = (c[5] - p[2] * m[1]) * inv;
  } else {
    FieldElement inv = p[2].inverse();
    m[2] = c[2] * inv;
    m[0] = c[4] * inv;
    m[1] = c[5] * inv;
  }
  if (is_zero(m)) return std::nullopt;
  Line ml(m);
  auto prod = (HomPoly::linear(p) * HomPoly::linear(ml.coords()));
  if (!proportional(q.to_poly(), prod)) return std::nullopt;
  return ml;
}

// A point of the conic other than `vertex`, found without extracting
// general square roots: hint points first, then coordinate-line sections.
inline std::optional<ProjPoint> find_conic_point(const Conic& q, const ProjPoint& vertex,
                                                 std::span<const ProjPoint> hints) {
  for (const auto& h : hints)
    if (h != vertex && q.contains(h)) return h;
  const auto m = q.sym_matrix();
  for (std::size_t k = 0; k < 3; ++k) {
    if (vertex[k].is_zero()) continue;  // line x_k = 0 would pass through the vertex
    std::size_t i = (k + 1) % 3, j = (k + 2) % 3;
    Vec3 ei{}, ej{};
    ei[i] = 1;
    ej[j] = 1;
    const FieldElement& qi = m[i][i];
    const FieldElement& qj = m[j][j];
    const FieldElement& bij = m[i][j];
    if (qi.is_zero()) return ProjPoint(ei);
    if (qj.is_zero()) return ProjPoint(ej);
    // qi s^2 + 2 bij s t + qj t^2 = 0
    if (auto root = try_sqrt(bij * bij - qi * qj)) {
      FieldElement s = (*root - bij) / qi;
      Vec3 p{};
      p[i] = s;
      p[j] = 1;
      return ProjPoint(p);
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Rank of the symmetric matrix decides the type; for two_lines the factors
/// are recovered. Points known to lie on the conic may be passed as hints.
inline ConicClassification conic_classify(const Conic& q, std::span<const ProjPoint> hints = {}) {
  auto m = q.sym_matrix();
  EchelonBasis<3> basis;
  for (const auto& row : m) basis.add(row);
  ConicClassification out;
  out.rank = basis.rank();
  if (out.rank == 3) return out;
  if (out.rank == 1) {
    out.kind = ConicKind::double_line;
    for (const auto& row : m)
      if (!is_zero(row)) {
        out.lines.push_back(Line(row));
        break;
      }
    return out;
  }
  out.kind = ConicKind::two_lines;
  const ProjPoint vertex(basis.kernel().front());
  auto pt = detail::find_conic_point(q, vertex, hints);
  if (!pt) throw Error("cannot split rank-2 conic over K without an incident point");
  Line first = line_through(vertex, *pt);
  auto second = detail::divide_conic_by_line(q, first);
  if (!second) throw Error("rank-2 conic did not factor through its vertex line");
  out.lines = {first, *second};
  std::sort(out.lines.begin(), out.lines.end(), KeyLess{});
  return out;
}

}  // namespace sextactica
