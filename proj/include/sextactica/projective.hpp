#pragma once

#include <array>
#include <compare>
#include <string>

#include "sextactica/field.hpp"

namespace sextactica {

using Vec3 = std::array<FieldElement, 3>;

inline FieldElement dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline bool is_zero(const Vec3& v) {
  return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

/// Homogeneous triple over K, normalized so the last nonzero entry is 1.
/// Points and lines share the representation but are distinct types.
template <class Tag>
class Homogeneous3 {
 public:
  Homogeneous3() = default;
  explicit Homogeneous3(Vec3 v) : v_(normalize(std::move(v))) {}
  Homogeneous3(FieldElement a, FieldElement b, FieldElement c)
      : Homogeneous3(Vec3{std::move(a), std::move(b), std::move(c)}) {}

  const Vec3& coords() const { return v_; }
  const FieldElement& operator[](std::size_t i) const { return v_[i]; }

  friend bool operator==(const Homogeneous3&, const Homogeneous3&) = default;
  friend auto operator<=>(const Homogeneous3& a, const Homogeneous3& b) { return a.v_ <=> b.v_; }

  /// Serialization of the normalized coordinates; also the canonical sort key.
  std::string key() const {
    std::string s;
    for (const auto& c : v_) {
      for (const auto& part : c.serialize()) s += part + ",";
      s += ";";
    }
    return s;
  }

  std::string to_pretty() const {
    return "(" + v_[0].to_pretty() + " : " + v_[1].to_pretty() + " : " + v_[2].to_pretty() + ")";
  }

  static Vec3 normalize(Vec3 v) {
    for (std::size_t i = 3; i-- > 0;) {
      if (v[i].is_zero()) continue;
      if (!v[i].is_one()) {
        FieldElement inv = v[i].inverse();
        for (std::size_t j = 0; j < i; ++j)
          if (!v[j].is_zero()) v[j] = v[j] * inv;
        v[i] = FieldElement(1);
      }
      return v;
    }
    throw Error("projective triple (0:0:0)");
  }

 private:
  Vec3 v_;
};

struct PointTag {};
struct LineTag {};
using ProjPoint = Homogeneous3<PointTag>;
using Line = Homogeneous3<LineTag>;

template <class Tag>
std::ostream& operator<<(std::ostream& os, const Homogeneous3<Tag>& h) {
  return os << h.to_pretty();
}

inline bool incident(const Line& l, const ProjPoint& p) { return dot(l.coords(), p.coords()).is_zero(); }

inline Line line_through(const ProjPoint& p, const ProjPoint& q) {
  return Line(cross(p.coords(), q.coords()));
}

inline ProjPoint meet(const Line& l, const Line& m) { return ProjPoint(cross(l.coords(), m.coords())); }

inline bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  return dot(cross(a.coords(), b.coords()), c.coords()).is_zero();
}

/// Orders by serialized coordinates, the canonical point ordering.
struct KeyLess {
  template <class T>
  bool operator()(const T& a, const T& b) const {
    return a.key() < b.key();
  }
};

}  // namespace sextactica
