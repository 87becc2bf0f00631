#pragma once

// Sparse homogeneous polynomials in x, y, z over K.

#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sextactica/field.hpp"
#include "sextactica/projective.hpp"

namespace sextactica {

enum class Var { x = 0, y = 1, z = 2 };
inline constexpr std::array<Var, 3> kVars{Var::x, Var::y, Var::z};

using Exponent = std::array<int, 3>;

// Graded lexicographic with x > y > z, largest monomial first.
struct GrLexDesc {
  bool operator()(const Exponent& a, const Exponent& b) const {
    int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
    if (da != db) return da > db;
    return a > b;
  }
};

class HomPoly {
 public:
  using Terms = std::map<Exponent, FieldElement, GrLexDesc>;

  HomPoly() = default;

  static HomPoly monomial(FieldElement c, int i, int j, int k) {
    HomPoly p;
    if (i < 0 || j < 0 || k < 0) throw Error("negative exponent");
    if (!c.is_zero()) {
      p.terms_.emplace(Exponent{i, j, k}, std::move(c));
      p.degree_ = i + j + k;
    }
    return p;
  }
  static HomPoly constant(FieldElement c) { return monomial(std::move(c), 0, 0, 0); }
  static HomPoly variable(Var v) {
    Exponent e{0, 0, 0};
    e[static_cast<int>(v)] = 1;
    return monomial(FieldElement(1), e[0], e[1], e[2]);
  }
  /// a*x + b*y + c*z
  static HomPoly linear(const Vec3& coeffs) {
    HomPoly p;
    for (Var v : kVars) p += HomPoly::variable(v).scaled(coeffs[static_cast<int>(v)]);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::optional<int> degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  FieldElement coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? FieldElement() : it->second;
  }

  HomPoly& operator+=(const HomPoly& o) { return accumulate(o, false); }
  HomPoly& operator-=(const HomPoly& o) { return accumulate(o, true); }
  friend HomPoly operator+(HomPoly a, const HomPoly& b) { return a += b; }
  friend HomPoly operator-(HomPoly a, const HomPoly& b) { return a -= b; }
  HomPoly operator-() const { return scaled(FieldElement(-1)); }

  friend HomPoly operator*(const HomPoly& a, const HomPoly& b) {
    HomPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
        auto [it, fresh] = r.terms_.try_emplace(e, ca * cb);
        if (!fresh) it->second += ca * cb;
      }
    r.degree_ = *a.degree_ + *b.degree_;
    r.prune();
    return r;
  }
  HomPoly& operator*=(const HomPoly& o) { return *this = *this * o; }

  HomPoly scaled(const FieldElement& s) const {
    HomPoly r;
    if (s.is_zero()) return r;
    r.degree_ = degree_;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c * s);
    return r;
  }

  HomPoly derivative(Var v) const {
    const int k = static_cast<int>(v);
    HomPoly r;
    for (const auto& [e, c] : terms_) {
      if (e[k] == 0) continue;
      Exponent d = e;
      --d[k];
      r.terms_.emplace(d, c.scaled(Rational(e[k])));
    }
    if (!r.terms_.empty()) r.degree_ = *degree_ - 1;
    return r;
  }

  std::array<HomPoly, 3> gradient() const {
    return {derivative(Var::x), derivative(Var::y), derivative(Var::z)};
  }

  FieldElement evaluate(const Vec3& pt) const {
    if (is_zero()) return FieldElement();
    const int d = *degree_;
    std::array<std::vector<FieldElement>, 3> powers;
    for (std::size_t v = 0; v < 3; ++v) {
      powers[v].reserve(static_cast<std::size_t>(d) + 1);
      powers[v].emplace_back(1);
      for (int i = 1; i <= d; ++i) powers[v].push_back(powers[v].back() * pt[v]);
    }
    FieldElement acc;
    for (const auto& [e, c] : terms_) {
      FieldElement m = c;
      for (std::size_t v = 0; v < 3; ++v)
        if (e[v] > 0) m = m * powers[v][static_cast<std::size_t>(e[v])];
      acc += m;
    }
    return acc;
  }
  FieldElement evaluate(const ProjPoint& p) const { return evaluate(p.coords()); }

  /// Linear change of variables: x_i -> images[i].
  HomPoly substitute(const std::array<HomPoly, 3>& images) const {
    HomPoly r;
    for (const auto& [e, c] : terms_) {
      HomPoly m = HomPoly::constant(c);
      for (std::size_t v = 0; v < 3; ++v)
        for (int i = 0; i < e[v]; ++i) m = m * images[v];
      r += m;
    }
    return r;
  }

  friend bool operator==(const HomPoly& a, const HomPoly& b) { return a.terms_ == b.terms_; }

  /// Text form: "coeff*x^i*y^j*z^k + ..." with integer shorthand for
  /// rational-integer coefficients and the bracket form otherwise.
  std::string to_text() const {
    if (is_zero()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += c.classify() == FieldClass::rational_integer ? c[0].get_str() : c.to_bracket();
      s += "*x^" + std::to_string(e[0]) + "*y^" + std::to_string(e[1]) + "*z^" + std::to_string(e[2]);
    }
    return s;
  }

  static HomPoly parse(std::string_view text);

 private:
  HomPoly& accumulate(const HomPoly& o, bool negate) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = negate ? -o : o;
      return *this;
    }
    if (*degree_ != *o.degree_) throw DegreeMismatch(*degree_, *o.degree_);
    for (const auto& [e, c] : o.terms_) {
      auto it = terms_.find(e);
      if (it == terms_.end())
        terms_.emplace(e, negate ? -c : c);
      else if (negate)
        it->second -= c;
      else
        it->second += c;
    }
    prune();
    return *this;
  }

  void prune() {
    std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
    if (terms_.empty()) degree_.reset();
  }

  Terms terms_;
  std::optional<int> degree_;
};

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Splits on `sep` outside of [...] brackets.
inline std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '[') ++depth;
    if (s[i] == ']') --depth;
    if (s[i] == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

inline FieldElement parse_coefficient(const std::string& tok) {
  if (tok.size() > 1 && tok[0] == '-' && tok[1] == '[') return -parse_coefficient(tok.substr(1));
  if (!tok.empty() && tok.front() == '[') {
    if (tok.back() != ']') throw ParseError("unterminated coefficient: " + tok);
    auto parts = split_top(std::string_view(tok).substr(1, tok.size() - 2), ',');
    return FieldElement::deserialize(parts);
  }
  return FieldElement(parse_rational(tok));
}

}  // namespace detail

inline HomPoly HomPoly::parse(std::string_view text) {
  std::string t;
  {
    // Binary minus becomes "+-" so every term carries its own sign.
    int depth = 0;
    char prev = 0;
    for (char ch : text) {
      if (std::isspace(static_cast<unsigned char>(ch))) continue;
      if (ch == '[') ++depth;
      if (ch == ']') --depth;
      if (ch == '-' && depth == 0 && prev != 0 && prev != '+' && prev != '*') t += '+';
      t += ch;
      prev = ch;
    }
  }
  if (t.empty()) throw ParseError("empty polynomial");
  HomPoly r;
  std::optional<int> deg;
  for (const auto& term : detail::split_top(t, '+')) {
    if (term.empty()) throw ParseError("empty term in '" + t + "'");
    FieldElement coeff(1);
    Exponent e{0, 0, 0};
    bool any_var = false;
    for (std::string factor : detail::split_top(term, '*')) {
      bool neg = false;
      if (!factor.empty() && factor[0] == '-' && factor.size() > 1 &&
          (factor[1] == 'x' || factor[1] == 'y' || factor[1] == 'z')) {
        neg = true;
        factor.erase(0, 1);
      }
      if (!factor.empty() && (factor[0] == 'x' || factor[0] == 'y' || factor[0] == 'z')) {
        int v = factor[0] - 'x';
        int power = 1;
        if (factor.size() > 1) {
          if (factor[1] != '^') throw ParseError("bad factor: " + factor);
          try {
            std::size_t used = 0;
            power = std::stoi(factor.substr(2), &used);
            if (used != factor.size() - 2 || power < 0) throw ParseError("bad exponent: " + factor);
          } catch (const std::logic_error&) {
            throw ParseError("bad exponent: " + factor);
          }
        }
        e[static_cast<std::size_t>(v)] += power;
        any_var = true;
        if (neg) coeff = -coeff;
      } else {
        coeff = coeff * detail::parse_coefficient(factor);
      }
    }
    (void)any_var;
    int d = e[0] + e[1] + e[2];
    if (term == "0") continue;
    if (deg && *deg != d) throw ParseError("inhomogeneous input: degrees " + std::to_string(*deg) + " and " + std::to_string(d));
    deg = d;
    r += monomial(coeff, e[0], e[1], e[2]);
  }
  return r;
}

inline std::ostream& operator<<(std::ostream& os, const HomPoly& p) { return os << p.to_text(); }

/// lambda with p = lambda * q, when such a nonzero lambda exists.
inline std::optional<FieldElement> proportional(const HomPoly& p, const HomPoly& q) {
  if (p.is_zero() || q.is_zero()) return std::nullopt;
  if (p.term_count() != q.term_count() || p.degree() != q.degree()) return std::nullopt;
  const auto& [e0, c0] = *q.terms().begin();
  auto it = p.terms().find(e0);
  if (it == p.terms().end()) return std::nullopt;
  FieldElement lambda = it->second / c0;
  for (const auto& [e, c] : q.terms()) {
    auto pt = p.terms().find(e);
    if (pt == p.terms().end() || pt->second != lambda * c) return std::nullopt;
  }
  return lambda;
}

/// Order of vanishing of p at pt: the least m such that some order-m
/// partial derivative is nonzero there.
inline int vanishing_order(const HomPoly& p, const ProjPoint& pt) {
  if (p.is_zero()) throw Error("vanishing_order of the zero polynomial");
  const int cap = *p.degree() + 1;
  std::map<Exponent, HomPoly> layer{{Exponent{0, 0, 0}, p}};
  for (int m = 0; m <= cap; ++m) {
    for (const auto& [_, q] : layer)
      if (!q.evaluate(pt).is_zero()) return m;
    std::map<Exponent, HomPoly> next;
    for (const auto& [e, q] : layer)
      for (Var v : kVars) {
        Exponent d = e;
        ++d[static_cast<int>(v)];
        if (!next.contains(d)) next.emplace(d, q.derivative(v));
      }
    layer = std::move(next);
  }
  throw Error("vanishing_order exceeded degree bound");
}

/// Square matrix of polynomials, size 3 or 4.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), m_(rows * cols) {
    if ((rows != 3 && rows != 4) || (cols != 3 && cols != 4))
      throw BadDimension("PolyMatrix dimensions must be 3 or 4");
  }
  PolyMatrix(std::initializer_list<std::initializer_list<HomPoly>> rows)
      : PolyMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
    std::size_t i = 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw BadDimension("ragged PolyMatrix");
      for (const auto& p : r) m_[i++] = p;
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  HomPoly& operator()(std::size_t r, std::size_t c) { return m_[r * cols_ + c]; }
  const HomPoly& operator()(std::size_t r, std::size_t c) const { return m_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t rows_, cols_;
  std::vector<HomPoly> m_;
};

namespace detail {

inline HomPoly cofactor_det(const PolyMatrix& m, std::vector<std::size_t> rows,
                            std::vector<std::size_t> cols) {
  if (rows.size() == 1) return m(rows[0], cols[0]);
  HomPoly acc;
  std::size_t r0 = rows[0];
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const HomPoly& entry = m(r0, cols[k]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> sub_cols = cols;
    sub_cols.erase(sub_cols.begin() + static_cast<std::ptrdiff_t>(k));
    HomPoly term = entry * cofactor_det(m, sub_rows, sub_cols);
    if (k % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

}  // namespace detail

/// Determinant by cofactor expansion along the first row.
inline HomPoly det(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw BadDimension("det of non-square PolyMatrix");
  std::vector<std::size_t> idx(m.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return detail::cofactor_det(m, idx, idx);
}

/// Jac(f, g, h) with explicit third row, as used for the gradient triples.
inline HomPoly jacobian(const HomPoly& f, const HomPoly& g, const std::array<HomPoly, 3>& third_row) {
  auto fg = f.gradient();
  auto gg = g.gradient();
  return det(PolyMatrix{{fg[0], fg[1], fg[2]}, {gg[0], gg[1], gg[2]}, {third_row[0], third_row[1], third_row[2]}});
}

inline HomPoly jacobian(const HomPoly& f, const HomPoly& g, const HomPoly& h) {
  return jacobian(f, g, h.gradient());
}

/// The Fermat cubic x^3 + y^3 + z^3.
inline HomPoly fermat_cubic() {
  return HomPoly::monomial(1, 3, 0, 0) + HomPoly::monomial(1, 0, 3, 0) + HomPoly::monomial(1, 0, 0, 3);
}

/// (x^3 - y^3)(y^3 - z^3)(z^3 - x^3), the product of the dual Hesse lines.
inline HomPoly dual_hesse_witness() {
  auto x3 = HomPoly::monomial(1, 3, 0, 0), y3 = HomPoly::monomial(1, 0, 3, 0), z3 = HomPoly::monomial(1, 0, 0, 3);
  return (x3 - y3) * (y3 - z3) * (z3 - x3);
}

}  // namespace sextactica
