#pragma once

// Exact arithmetic in the degree-6 number field K = Q(eps, mu) with
// eps^2 + eps + 1 = 0 and mu^3 = 2.
//
// Elements are stored as six rational coordinates in the fixed basis
//
//     (1, eps, mu, eps*mu, mu^2, eps*mu^2)
//
// so coordinate index i encodes eps^(i % 2) * mu^(i / 2). Every operation
// leaves the coordinates reduced, hence equality is coordinate equality.

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "sextactica/errors.hpp"

namespace sextactica {

using Rational = mpq_class;
using Integer = mpz_class;

enum class FieldClass { zero, rational, rational_integer, irrational };

inline std::string to_string(FieldClass c) {
  switch (c) {
    case FieldClass::zero: return "zero";
    case FieldClass::rational: return "rational";
    case FieldClass::rational_integer: return "rational_integer";
    case FieldClass::irrational: return "irrational";
  }
  return "?";
}

/// "num/den" with den >= 1 always present.
inline std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Accepts "n" or "n/d" (optional sign on n). Throws ParseError.
inline Rational parse_rational(std::string_view s) {
  auto is_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string_view t) {
    return std::string(!t.empty() && t[0] == '+' ? t.substr(1) : t);
  };
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : s.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("bad rational: '" + std::string(s) + "'");
  Integer d(strip_plus(den));
  if (d == 0) throw ParseError("zero denominator: '" + std::string(s) + "'");
  Rational q(Integer(strip_plus(num)), d);
  q.canonicalize();
  return q;
}

/// Exact rational cube root when one exists.
inline std::optional<Rational> rational_cube_root(const Rational& q) {
  Integer n = q.get_num(), d = q.get_den(), rn, rd;
  if (mpz_root(rn.get_mpz_t(), n.get_mpz_t(), 3) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), d.get_mpz_t(), 3) == 0) return std::nullopt;
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

/// Exact rational square root when one exists.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 ||
      mpz_perfect_square_p(q.get_den_mpz_t()) == 0)
    return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), q.get_den_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

class FieldElement {
 public:
  static constexpr std::size_t kDim = 6;
  using Coords = std::array<Rational, kDim>;

  FieldElement() = default;
  FieldElement(long v) { c_[0] = v; }  // NOLINT: integer literals are field elements
  explicit FieldElement(Rational q) { c_[0] = std::move(q); }
  explicit FieldElement(Coords c) : c_(std::move(c)) {
    for (auto& q : c_) q.canonicalize();
  }

  static FieldElement eps() { return basis(1); }
  static FieldElement mu() { return basis(2); }
  static FieldElement basis(std::size_t i) {
    FieldElement r;
    r.c_.at(i) = 1;
    return r;
  }

  const Coords& coords() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }

  bool is_zero() const {
    for (const auto& q : c_)
      if (sgn(q) != 0) return false;
    return true;
  }
  bool is_one() const { return c_[0] == 1 && is_rational(); }
  bool is_rational() const {
    for (std::size_t i = 1; i < kDim; ++i)
      if (sgn(c_[i]) != 0) return false;
    return true;
  }

  FieldClass classify() const {
    if (is_zero()) return FieldClass::zero;
    if (!is_rational()) return FieldClass::irrational;
    return c_[0].get_den() == 1 ? FieldClass::rational_integer : FieldClass::rational;
  }

  FieldElement operator-() const {
    FieldElement r(*this);
    for (auto& q : r.c_) q = -q;
    return r;
  }
  FieldElement& operator+=(const FieldElement& o) {
    for (std::size_t i = 0; i < kDim; ++i)
      if (sgn(o.c_[i]) != 0) c_[i] += o.c_[i];
    return *this;
  }
  FieldElement& operator-=(const FieldElement& o) {
    for (std::size_t i = 0; i < kDim; ++i)
      if (sgn(o.c_[i]) != 0) c_[i] -= o.c_[i];
    return *this;
  }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this * o.inverse(); }

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a * b.inverse();
  }

  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    // acc[e][m] holds the coefficient of eps^e mu^m before reduction,
    // e in [0,2], m in [0,4].
    std::array<std::array<Rational, 5>, 3> acc;
    Rational t;
    for (std::size_t i = 0; i < kDim; ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (std::size_t j = 0; j < kDim; ++j) {
        if (sgn(b.c_[j]) == 0) continue;
        mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
        acc[(i & 1) + (j & 1)][(i >> 1) + (j >> 1)] += t;
      }
    }
    // mu^3 -> 2, mu^4 -> 2 mu
    for (auto& row : acc) {
      for (std::size_t m = 3; m < 5; ++m) {
        if (sgn(row[m]) == 0) continue;
        mpq_mul_2exp(t.get_mpq_t(), row[m].get_mpq_t(), 1);
        row[m - 3] += t;
      }
    }
    // eps^2 -> -1 - eps
    for (std::size_t m = 0; m < 3; ++m) {
      if (sgn(acc[2][m]) == 0) continue;
      acc[0][m] -= acc[2][m];
      acc[1][m] -= acc[2][m];
    }
    FieldElement r;
    for (std::size_t m = 0; m < 3; ++m) {
      r.c_[2 * m] = std::move(acc[0][m]);
      r.c_[2 * m + 1] = std::move(acc[1][m]);
    }
    return r;
  }

  FieldElement scaled(const Rational& q) const {
    FieldElement r(*this);
    for (auto& c : r.c_)
      if (sgn(c) != 0) c *= q;
    return r;
  }

  // Solves M x = e_0 where column j of M holds the coordinates of
  // (*this) * basis_j, by exact Gauss-Jordan elimination over Q.
  FieldElement inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) return FieldElement(Rational(1 / c_[0]));
    std::array<std::array<Rational, kDim + 1>, kDim> m;
    for (std::size_t j = 0; j < kDim; ++j) {
      FieldElement col = *this * basis(j);
      for (std::size_t i = 0; i < kDim; ++i) m[i][j] = col.c_[i];
    }
    m[0][kDim] = 1;
    for (std::size_t col = 0; col < kDim; ++col) {
      std::size_t piv = col;
      while (piv < kDim && sgn(m[piv][col]) == 0) ++piv;
      if (piv == kDim) throw DivisionByZero();  // unreachable in a field
      std::swap(m[piv], m[col]);
      Rational inv = 1 / m[col][col];
      for (std::size_t k = col; k <= kDim; ++k) m[col][k] *= inv;
      for (std::size_t r = 0; r < kDim; ++r) {
        if (r == col || sgn(m[r][col]) == 0) continue;
        Rational f = m[r][col];
        for (std::size_t k = col; k <= kDim; ++k)
          if (sgn(m[col][k]) != 0) m[r][k] -= f * m[col][k];
      }
    }
    FieldElement r;
    for (std::size_t i = 0; i < kDim; ++i) r.c_[i] = m[i][kDim];
    return r;
  }

  /// The Q(mu)-automorphism eps -> eps^2 (complex conjugation).
  FieldElement conjugate() const {
    // a + b eps -> a + b eps^2 = (a - b) - b eps, per mu-power.
    FieldElement r;
    for (std::size_t m = 0; m < 3; ++m) {
      r.c_[2 * m] = c_[2 * m] - c_[2 * m + 1];
      r.c_[2 * m + 1] = -c_[2 * m + 1];
    }
    return r;
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.c_ == b.c_; }
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
    for (std::size_t i = 0; i < kDim; ++i) {
      int c = cmp(a.c_[i], b.c_[i]);
      if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  /// Six "num/den" strings in basis order.
  std::vector<std::string> serialize() const {
    std::vector<std::string> out;
    out.reserve(kDim);
    for (const auto& q : c_) out.push_back(rational_to_string(q));
    return out;
  }
  static FieldElement deserialize(const std::vector<std::string>& parts) {
    if (parts.size() != kDim)
      throw ParseError("field element needs 6 coordinates, got " + std::to_string(parts.size()));
    Coords c;
    for (std::size_t i = 0; i < kDim; ++i) c[i] = parse_rational(parts[i]);
    return FieldElement(std::move(c));
  }

  /// Compact bracket form "[a,b,c,d,e,f]" used in the polynomial text format.
  std::string to_bracket() const {
    std::string s = "[";
    for (std::size_t i = 0; i < kDim; ++i) {
      if (i) s += ",";
      s += rational_to_string(c_[i]);
    }
    return s + "]";
  }

  /// Human-readable form such as "-1/2*eps*mu^2 + 1".
  std::string to_pretty() const {
    static const char* names[kDim] = {"", "eps", "mu", "eps*mu", "mu^2", "eps*mu^2"};
    std::string s;
    for (std::size_t i = 0; i < kDim; ++i) {
      if (sgn(c_[i]) == 0) continue;
      Rational a = abs(c_[i]);
      if (s.empty())
        s += sgn(c_[i]) < 0 ? "-" : "";
      else
        s += sgn(c_[i]) < 0 ? " - " : " + ";
      if (i == 0)
        s += a.get_str();
      else if (a == 1)
        s += names[i];
      else
        s += a.get_str() + "*" + names[i];
    }
    return s.empty() ? "0" : s;
  }

 private:
  Coords c_;
};

inline std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.to_pretty(); }

inline FieldElement pow(FieldElement base, unsigned n) {
  FieldElement r(1);
  while (n) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

/// Cube root of a rational c inside K of the form r * mu^k (the real root).
/// Any other input is outside what the binomial solver supports.
inline FieldElement real_cube_root(const FieldElement& c) {
  if (!c.is_rational()) throw NonBinomial("cube root of non-rational " + c.to_pretty());
  const Rational& q = c[0];
  if (sgn(q) == 0) return FieldElement();
  Rational scale = 1;
  for (unsigned k = 0; k < 3; ++k) {
    if (auto r = rational_cube_root(q / scale)) return pow(FieldElement::mu(), k) * FieldElement(*r);
    scale *= 2;
  }
  throw NonBinomial("no cube root of " + q.get_str() + " in Q(mu)");
}

namespace detail {

// sqrt in Q(eps) = Q(sqrt(-3)); input has no mu-components.
inline std::optional<FieldElement> sqrt_in_eps_field(const FieldElement& a) {
  // a = u + v eps = p + q sqrt(-3) with p = u - v/2, q = v/2.
  Rational p = a[0] - a[1] / 2, q = a[1] / 2;
  std::vector<std::pair<Rational, Rational>> cands;  // (s, t): s + t sqrt(-3)
  if (sgn(q) == 0) {
    if (auto s = rational_sqrt(p)) cands.emplace_back(*s, 0);
    if (auto t = rational_sqrt(Rational(-p / 3))) cands.emplace_back(0, *t);
  } else if (auto n = rational_sqrt(Rational(p * p + 3 * q * q))) {
    for (const Rational& s2 : {Rational((p + *n) / 2), Rational((p - *n) / 2)})
      if (sgn(s2) != 0)
        if (auto s = rational_sqrt(s2)) cands.emplace_back(*s, Rational(q / (2 * *s)));
  }
  for (const auto& [s, t] : cands) {
    FieldElement r(FieldElement::Coords{Rational(s + t), Rational(2 * t), 0, 0, 0, 0});
    if (r * r == a) return r;
  }
  return std::nullopt;
}

}  // namespace detail

/// Square root in K for elements of the form e * mu^k with e in Q(eps).
/// Returns nullopt when a is not of that shape or not a square.
inline std::optional<FieldElement> try_sqrt(const FieldElement& a) {
  if (a.is_zero()) return FieldElement();
  int power = -1;
  for (std::size_t m = 0; m < 3; ++m) {
    if (sgn(a[2 * m]) == 0 && sgn(a[2 * m + 1]) == 0) continue;
    if (power >= 0) return std::nullopt;
    power = static_cast<int>(m);
  }
  std::size_t m = static_cast<std::size_t>(power);
  FieldElement e(FieldElement::Coords{a[2 * m], a[2 * m + 1], 0, 0, 0, 0});
  std::optional<FieldElement> r;
  if (m == 0) {
    r = detail::sqrt_in_eps_field(e);
  } else if (m == 2) {
    if (auto s = detail::sqrt_in_eps_field(e)) r = *s * FieldElement::mu();
  } else {
    // e mu = (e/2) mu^4
    if (auto s = detail::sqrt_in_eps_field(e.scaled(Rational(1, 2))))
      r = *s * FieldElement::mu() * FieldElement::mu();
  }
  if (r && *r * *r == a) return r;
  return std::nullopt;
}

}  // namespace sextactica
