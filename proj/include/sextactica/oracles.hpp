#pragma once

// Combinatorial counts read off the level structure. These never touch
// coordinates of the sextactic points beyond their alpha labels, so they act
// as an independent check on the geometric census.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sextactica/grouplaw.hpp"

namespace sextactica {

enum class ConicPredicate { sum_zero, sum_two_torsion, components_mod3 };

inline const std::array<ConicPredicate, 3> kConicPredicates{ConicPredicate::sum_zero, ConicPredicate::sum_two_torsion,
                                                            ConicPredicate::components_mod3};

inline std::string to_string(ConicPredicate p) {
  switch (p) {
    case ConicPredicate::sum_zero: return "sum_zero";
    case ConicPredicate::sum_two_torsion: return "sum_two_torsion";
    case ConicPredicate::components_mod3: return "components_mod3";
  }
  return "?";
}

inline bool satisfies(ConicPredicate pred, Z6Pair s) {
  switch (pred) {
    case ConicPredicate::sum_zero: return s[0] == 0 && s[1] == 0;
    case ConicPredicate::sum_two_torsion: return (s[0] == 0 || s[0] == 3) && (s[1] == 0 || s[1] == 3);
    case ConicPredicate::components_mod3: return s[0] % 3 == 0 && s[1] % 3 == 0;
  }
  return false;
}

using SubsetMask = std::uint32_t;

inline std::vector<Z6Pair> alpha_labels(const LevelStructure& ls, const CubicGroup& g, const std::vector<ProjPoint>& pts) {
  std::vector<Z6Pair> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(ls.alpha(g.make_point(p)));
  return out;
}

/// Unordered triples of distinct labels summing to (0, 0), as index triples.
inline std::vector<std::array<int, 3>> oracle_collinear_triples(const std::vector<Z6Pair>& labels) {
  std::vector<std::array<int, 3>> out;
  const int n = static_cast<int>(labels.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Z6Pair s = z6_add(z6_add(labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>(j)]),
                          labels[static_cast<std::size_t>(k)]);
        if (s == Z6Pair{0, 0}) out.push_back({i, j, k});
      }
  return out;
}

/// 6-subsets (as bitmasks, ascending) whose label sum satisfies `pred`.
inline std::vector<SubsetMask> oracle_conic_subsets(const std::vector<Z6Pair>& labels, ConicPredicate pred) {
  std::vector<SubsetMask> out;
  const int n = static_cast<int>(labels.size());
  std::array<int, 6> idx{};
  std::array<Z6Pair, 7> partial{};
  // iterative lexicographic enumeration with running sums
  auto rec = [&](auto&& self, int depth, int start) -> void {
    if (depth == 6) {
      if (satisfies(pred, partial[6])) {
        SubsetMask m = 0;
        for (int i : idx) m |= SubsetMask{1} << i;
        out.push_back(m);
      }
      return;
    }
    for (int i = start; i <= n - (6 - depth); ++i) {
      idx[static_cast<std::size_t>(depth)] = i;
      partial[static_cast<std::size_t>(depth) + 1] =
          z6_add(partial[static_cast<std::size_t>(depth)], labels[static_cast<std::size_t>(i)]);
      self(self, depth + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sextactica
