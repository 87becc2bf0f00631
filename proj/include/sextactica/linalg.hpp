#pragma once

// Small dense exact linear algebra over K.

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "sextactica/field.hpp"

namespace sextactica {

template <std::size_t N>
using RowK = std::array<FieldElement, N>;

/// Incrementally maintained reduced row echelon form: every stored row has
/// a leading 1 in its pivot column and zeros in all other pivot columns.
template <std::size_t N>
class EchelonBasis {
 public:
  std::size_t rank() const { return rows_.size(); }

  /// Adds a row; returns false when it is already in the span.
  bool add(RowK<N> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t p = pivots_[r];
      if (v[p].is_zero()) continue;
      const FieldElement f = v[p];
      for (std::size_t k = 0; k < N; ++k)
        if (!rows_[r][k].is_zero()) v[k] -= f * rows_[r][k];
    }
    std::size_t p = 0;
    while (p < N && v[p].is_zero()) ++p;
    if (p == N) return false;
    if (!v[p].is_one()) {
      const FieldElement inv = v[p].inverse();
      for (std::size_t k = p; k < N; ++k)
        if (!v[k].is_zero()) v[k] = v[k] * inv;
    }
    for (auto& row : rows_) {
      if (row[p].is_zero()) continue;
      const FieldElement f = row[p];
      for (std::size_t k = 0; k < N; ++k)
        if (!v[k].is_zero()) row[k] -= f * v[k];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  /// Basis of {c : row . c = 0 for every row}.
  std::vector<RowK<N>> kernel() const {
    std::array<bool, N> is_pivot{};
    for (auto p : pivots_) is_pivot[p] = true;
    std::vector<RowK<N>> out;
    for (std::size_t f = 0; f < N; ++f) {
      if (is_pivot[f]) continue;
      RowK<N> c;
      c[f] = FieldElement(1);
      for (std::size_t r = 0; r < rows_.size(); ++r)
        if (!rows_[r][f].is_zero()) c[pivots_[r]] = -rows_[r][f];
      out.push_back(std::move(c));
    }
    return out;
  }

 private:
  std::vector<RowK<N>> rows_;
  std::vector<std::size_t> pivots_;
};

template <std::size_t N>
FieldElement dot(const RowK<N>& a, const RowK<N>& b) {
  FieldElement acc;
  for (std::size_t i = 0; i < N; ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  return acc;
}

template <std::size_t N>
std::size_t rank(const std::vector<RowK<N>>& rows) {
  EchelonBasis<N> b;
  for (const auto& r : rows) b.add(r);
  return b.rank();
}

}  // namespace sextactica
