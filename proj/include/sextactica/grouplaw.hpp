#pragma once

// Chord-tangent group law on a smooth plane cubic with a flex as origin,
// the torsion subgroups F[2], F[3], F[6] of the Fermat cubic and a level-6
// structure alpha: F[6] -> Z6 x Z6.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "sextactica/fermat.hpp"
#include "sextactica/poly.hpp"
#include "sextactica/projective.hpp"

namespace sextactica {

#ifdef NDEBUG
inline constexpr bool kCheckGroupLaw = false;
#else
inline constexpr bool kCheckGroupLaw = true;
#endif

class CurvePoint {
 public:
  CurvePoint(const HomPoly& cubic, ProjPoint p) : p_(std::move(p)) {
    if (!cubic.evaluate(p_).is_zero()) throw Error("point " + p_.to_pretty() + " is not on the curve");
  }
  const ProjPoint& point() const { return p_; }
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
  friend auto operator<=>(const CurvePoint& a, const CurvePoint& b) { return a.p_ <=> b.p_; }

 private:
  struct Unchecked {};
  CurvePoint(Unchecked, ProjPoint p) : p_(std::move(p)) {}
  friend class CubicGroup;
  ProjPoint p_;
};

class CubicGroup {
 public:
  CubicGroup(HomPoly cubic, const ProjPoint& origin)
      : cubic_(std::move(cubic)), grad_(cubic_.gradient()), origin_(cubic_, origin) {
    if (cubic_.degree() != 3) throw Error("group law needs a cubic");
    if (third_intersection(origin_, origin_) != origin_) throw Error("origin is not a flex");
  }

  /// Fermat cubic with origin P1 = (1 : -1 : 0).
  static CubicGroup fermat() { return CubicGroup(fermat_cubic(), reference::flex_points().front()); }

  const HomPoly& cubic() const { return cubic_; }
  const CurvePoint& origin() const { return origin_; }

  CurvePoint make_point(const ProjPoint& p) const { return CurvePoint(cubic_, p); }

  /// Residual intersection of line(p, q) with the cubic, or of the tangent
  /// at p when p == q. The restriction to the line factors as
  /// s t (A s + B t), so the third point is B p - A q.
  CurvePoint third_intersection(const CurvePoint& p, const CurvePoint& q) const {
    const Vec3& a = p.point().coords();
    Vec3 r;
    if (p == q) {
      const Vec3 tangent = gradient_at(a);
      const Vec3 d = other_point_on(tangent, a);
      // restriction to s a + t d is t^2 (beta s + gamma t)
      const FieldElement beta = dot(gradient_at(d), a);
      const FieldElement gamma = cubic_.evaluate(d);
      r = combine(gamma, a, -beta, d);
    } else {
      const Vec3& b = q.point().coords();
      const FieldElement A = dot(gradient_at(a), b);
      const FieldElement B = dot(gradient_at(b), a);
      if (A.is_zero() && B.is_zero()) throw Error("line is a component of the cubic");
      r = combine(B, a, -A, b);
    }
    CurvePoint out(CurvePoint::Unchecked{}, ProjPoint(r));
    if constexpr (kCheckGroupLaw) check_third(p, q, out);
    return out;
  }

  CurvePoint negate(const CurvePoint& p) const { return third_intersection(origin_, p); }
  CurvePoint add(const CurvePoint& p, const CurvePoint& q) const {
    return third_intersection(origin_, third_intersection(p, q));
  }
  CurvePoint sub(const CurvePoint& p, const CurvePoint& q) const { return add(p, negate(q)); }

  /// n p by double-and-add; negative n allowed.
  CurvePoint scalar_mul(long n, const CurvePoint& p) const {
    CurvePoint base = n < 0 ? negate(p) : p;
    unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    CurvePoint acc = origin_;
    while (k) {
      if (k & 1) acc = add(acc, base);
      k >>= 1;
      if (k) base = add(base, base);
    }
    return acc;
  }

  /// Smallest n >= 1 with n p = o, searching up to `bound`.
  std::optional<int> order(const CurvePoint& p, int bound = 6) const {
    CurvePoint acc = p;
    for (int n = 1; n <= bound; ++n) {
      if (acc == origin_) return n;
      acc = add(acc, p);
    }
    return std::nullopt;
  }

  CurvePoint sum(std::span<const CurvePoint> pts) const {
    CurvePoint acc = origin_;
    for (const auto& p : pts) acc = add(acc, p);
    return acc;
  }

  /// The sixth point in which a conic through `pts` (at most five points,
  /// repetitions meaning tangency) meets the cubic: a conic cuts a divisor
  /// equivalent to 6 o, so the residual is minus the sum.
  CurvePoint conic_residual(std::span<const CurvePoint> pts) const {
    if (pts.size() > 5) throw Error("conic_residual takes at most five points");
    return negate(sum(pts));
  }

 private:
  Vec3 gradient_at(const Vec3& p) const { return {grad_[0].evaluate(p), grad_[1].evaluate(p), grad_[2].evaluate(p)}; }

  static Vec3 combine(const FieldElement& s, const Vec3& a, const FieldElement& t, const Vec3& b) {
    return {s * a[0] + t * b[0], s * a[1] + t * b[1], s * a[2] + t * b[2]};
  }

  // A point of `line` different from `p`.
  static Vec3 other_point_on(const Vec3& line, const Vec3& p) {
    for (std::size_t k = 0; k < 3; ++k) {
      Vec3 e{};
      e[k] = 1;
      Vec3 d = cross(line, e);
      if (!is_zero(d) && !is_zero(cross(d, p))) return d;
    }
    throw Error("degenerate tangent line");
  }

  void check_third(const CurvePoint& p, const CurvePoint& q, const CurvePoint& r) const {
    if (!cubic_.evaluate(r.point()).is_zero()) throw Error("third_intersection left the curve");
    const Vec3 l = p == q ? gradient_at(p.point().coords()) : cross(p.point().coords(), q.point().coords());
    if (!dot(l, r.point().coords()).is_zero()) throw Error("third_intersection left the line");
  }

  HomPoly cubic_;
  std::array<HomPoly, 3> grad_;
  CurvePoint origin_;
};

/// Points of F[n] among the candidates, for n in {2, 3, 6}.
inline std::vector<CurvePoint> torsion(const CubicGroup& g, int n, std::span<const CurvePoint> candidates) {
  if (n != 2 && n != 3 && n != 6) throw Error("torsion: n must be 2, 3 or 6");
  std::vector<CurvePoint> out;
  for (const auto& p : candidates)
    if (g.scalar_mul(n, p) == g.origin()) out.push_back(p);
  return out;
}

/// Flexes followed by sextactic points: the 36 candidates for F[6].
inline std::vector<CurvePoint> fermat_six_torsion_candidates(const CubicGroup& g, const std::vector<ProjPoint>& flexes,
                                                             const std::vector<ProjPoint>& sextactic) {
  std::vector<CurvePoint> out;
  for (const auto& p : flexes) out.push_back(g.make_point(p));
  for (const auto& p : sextactic) out.push_back(g.make_point(p));
  return out;
}

using Z6Pair = std::array<int, 2>;

inline Z6Pair z6_add(Z6Pair a, Z6Pair b) { return {(a[0] + b[0]) % 6, (a[1] + b[1]) % 6}; }
inline Z6Pair z6_neg(Z6Pair a) { return {(6 - a[0]) % 6, (6 - a[1]) % 6}; }

struct LevelStructure {
  CurvePoint origin;
  CurvePoint gen1;
  CurvePoint gen2;
  std::map<CurvePoint, Z6Pair> label;         // alpha
  std::map<Z6Pair, CurvePoint> point_of;      // alpha^-1

  const Z6Pair& alpha(const CurvePoint& p) const {
    auto it = label.find(p);
    if (it == label.end()) throw Error("point is not in F[6]");
    return it->second;
  }
};

namespace detail {

inline std::vector<CurvePoint> multiples(const CubicGroup& g, const CurvePoint& p) {
  std::vector<CurvePoint> out{g.origin()};
  for (int k = 1; k < 6; ++k) out.push_back(g.add(out.back(), p));
  return out;
}

}  // namespace detail

/// Builds alpha from the `pair_rank`-th valid generator pair in canonical
/// order (rank 0 is the default choice). The table is checked to be a
/// bijection onto F[6] and a homomorphism on all 36^2 pairs.
inline LevelStructure build_level_structure(const CubicGroup& g, const std::vector<CurvePoint>& six_torsion,
                                            std::size_t pair_rank = 0) {
  std::vector<CurvePoint> order6;
  for (const auto& p : six_torsion)
    if (g.order(p) == 6) order6.push_back(p);
  std::sort(order6.begin(), order6.end(),
            [](const CurvePoint& a, const CurvePoint& b) { return a.point().key() < b.point().key(); });

  std::size_t seen = 0;
  for (const auto& g1 : order6) {
    const auto m1 = detail::multiples(g, g1);
    for (const auto& g2 : order6) {
      const auto m2 = detail::multiples(g, g2);
      bool trivial_meet = true;
      for (int a = 1; a < 6 && trivial_meet; ++a)
        if (std::find(m2.begin(), m2.end(), m1[static_cast<std::size_t>(a)]) != m2.end()) trivial_meet = false;
      if (!trivial_meet) continue;
      if (seen++ < pair_rank) continue;

      LevelStructure ls{g.origin(), g1, g2, {}, {}};
      for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
          CurvePoint p = g.add(m1[static_cast<std::size_t>(a)], m2[static_cast<std::size_t>(b)]);
          ls.label.emplace(p, Z6Pair{a, b});
          ls.point_of.emplace(Z6Pair{a, b}, p);
        }
      if (ls.label.size() != 36) throw GeneratorSearchFailed();
      for (const auto& p : six_torsion)
        if (!ls.label.contains(p)) throw GeneratorSearchFailed();
      for (const auto& p : six_torsion)
        for (const auto& q : six_torsion)
          if (ls.alpha(g.add(p, q)) != z6_add(ls.alpha(p), ls.alpha(q)))
            throw Error("alpha is not a homomorphism");
      return ls;
    }
  }
  throw GeneratorSearchFailed();
}

}  // namespace sextactica
