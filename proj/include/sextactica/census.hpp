#pragma once

// Exhaustive census of conics through six of a list of points (the 27
// sextactic points in practice), the line arrangement cut out by the split
// conics, and the five-point scan.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "sextactica/conic.hpp"
#include "sextactica/fermat.hpp"
#include "sextactica/grouplaw.hpp"
#include "sextactica/linalg.hpp"
#include "sextactica/oracles.hpp"
#include "sextactica/parallel.hpp"

namespace sextactica {

using Members = std::array<std::uint8_t, 6>;

inline SubsetMask to_mask(std::span<const std::uint8_t> members) {
  SubsetMask m = 0;
  for (auto i : members) m |= SubsetMask{1} << i;
  return m;
}

struct CensusConic {
  Members members;
  Conic conic;
  ConicKind kind;
  std::vector<Line> lines;  // two factors when kind == two_lines
};

struct CensusResult {
  std::size_t point_count = 0;
  std::size_t subsets_scanned = 0;
  std::size_t pencils = 0;
  std::vector<CensusConic> conics;  // sorted by members
  std::vector<std::size_t> per_point_total, per_point_smooth;

  // Bezout guard: no conic arose from two different 6-subsets.
  bool bezout_ok = true;
  // Every split conic has exactly 3 members on each line and its two lines
  // meet outside the point list.
  bool split_lines_ok = true;

  std::size_t count(ConicKind k) const {
    return static_cast<std::size_t>(
        std::count_if(conics.begin(), conics.end(), [k](const CensusConic& c) { return c.kind == k; }));
  }
  std::size_t total() const { return conics.size(); }
};

namespace detail {

struct CensusHit {
  Members members;
  ConicCoeffs coeffs;
};

struct ChunkOutput {
  std::vector<CensusHit> hits;
  std::size_t scanned = 0;
  std::size_t pencils = 0;
};

// Chunks are the pairs (i, j), i < j, in lexicographic order.
inline std::vector<std::array<int, 2>> census_chunks(int n) {
  std::vector<std::array<int, 2>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back({i, j});
  return out;
}

class SubsetWalker {
 public:
  SubsetWalker(const std::vector<ProjPoint>& pts, const std::vector<ConicCoeffs>& mons, ChunkOutput& out)
      : pts_(pts), mons_(mons), out_(out), n_(static_cast<int>(pts.size())) {}

  void run(int i, int j) {
    idx_[0] = static_cast<std::uint8_t>(i);
    idx_[1] = static_cast<std::uint8_t>(j);
    EchelonBasis<6> b;
    b.add(mons_[static_cast<std::size_t>(i)]);
    b.add(mons_[static_cast<std::size_t>(j)]);
    walk(b, 2, j + 1);
  }

 private:
  void walk(const EchelonBasis<6>& basis, int depth, int start) {
    if (depth == 5) {
      finish(basis, start);
      return;
    }
    for (int k = start; k <= n_ - (6 - depth); ++k) {
      idx_[static_cast<std::size_t>(depth)] = static_cast<std::uint8_t>(k);
      EchelonBasis<6> next = basis;
      next.add(mons_[static_cast<std::size_t>(k)]);
      walk(next, depth + 1, k + 1);
    }
  }

  // Prefix of five rows fixed; test every sixth index.
  void finish(const EchelonBasis<6>& basis, int start) {
    for (int k = start; k < n_; ++k) {
      idx_[5] = static_cast<std::uint8_t>(k);
      ++out_.scanned;
    }
    if (basis.rank() == 5) {
      const ConicCoeffs c = basis.kernel().front();
      for (int k = start; k < n_; ++k) {
        if (!dot(c, mons_[static_cast<std::size_t>(k)]).is_zero()) continue;
        idx_[5] = static_cast<std::uint8_t>(k);
        out_.hits.push_back({idx_, c});
      }
      return;
    }
    // Dependent prefix: decide each 6-subset from scratch.
    for (int k = start; k < n_; ++k) {
      idx_[5] = static_cast<std::uint8_t>(k);
      std::vector<ProjPoint> six;
      for (auto i : idx_) six.push_back(pts_[i]);
      ConicFit fit = conic_through(six);
      if (fit.kind == ConicFit::Kind::pencil) ++out_.pencils;
      if (fit.kind == ConicFit::Kind::unique) out_.hits.push_back({idx_, fit.conic->coeffs()});
    }
  }

  const std::vector<ProjPoint>& pts_;
  const std::vector<ConicCoeffs>& mons_;
  ChunkOutput& out_;
  int n_;
  Members idx_{};
};

}  // namespace detail

/// Walks all 6-subsets of `pts` in lexicographic order and records every
/// subset that spans exactly one conic. Results do not depend on `threads`.
inline CensusResult conic_census(const std::vector<ProjPoint>& pts, unsigned threads = 1,
                                 const ProgressFn& progress = {}) {
  if (pts.size() < 6 || pts.size() > 32) throw Error("census needs between 6 and 32 points");
  std::vector<ConicCoeffs> mons;
  for (const auto& p : pts) mons.push_back(conic_monomials(p.coords()));
  const auto chunks = detail::census_chunks(static_cast<int>(pts.size()));
  std::vector<detail::ChunkOutput> outputs(chunks.size());
  for_each_chunk(
      chunks.size(), threads,
      [&](std::size_t c) {
        detail::SubsetWalker walker(pts, mons, outputs[c]);
        walker.run(chunks[c][0], chunks[c][1]);
      },
      progress);

  CensusResult r;
  r.point_count = pts.size();
  r.per_point_total.assign(pts.size(), 0);
  r.per_point_smooth.assign(pts.size(), 0);
  std::map<Conic, Members> seen;
  for (auto& out : outputs) {
    r.subsets_scanned += out.scanned;
    r.pencils += out.pencils;
    for (auto& hit : out.hits) {
      Conic conic(hit.coeffs);
      auto [it, fresh] = seen.emplace(conic, hit.members);
      if (!fresh) {
        r.bezout_ok = false;
        continue;
      }
      r.conics.push_back(CensusConic{hit.members, std::move(conic), ConicKind::smooth, {}});
    }
  }
  std::sort(r.conics.begin(), r.conics.end(),
            [](const CensusConic& a, const CensusConic& b) { return a.members < b.members; });

  std::set<ProjPoint> point_set(pts.begin(), pts.end());
  for (auto& c : r.conics) {
    std::vector<ProjPoint> on;
    for (auto i : c.members) on.push_back(pts[i]);
    auto cls = conic_classify(c.conic, on);
    c.kind = cls.kind;
    c.lines = cls.lines;
    for (auto i : c.members) {
      ++r.per_point_total[i];
      if (c.kind == ConicKind::smooth) ++r.per_point_smooth[i];
    }
    if (c.kind == ConicKind::two_lines) {
      for (const auto& l : c.lines) {
        auto n = std::count_if(on.begin(), on.end(), [&](const ProjPoint& p) { return incident(l, p); });
        if (n != 3) r.split_lines_ok = false;
      }
      if (point_set.contains(meet(c.lines[0], c.lines[1]))) r.split_lines_ok = false;
    }
  }
  return r;
}

struct LineArrangement {
  std::vector<Line> lines;  // canonically sorted
  ArrangementSummary summary;
  // members of each line among the points, ascending
  std::vector<std::array<int, 3>> triples;
  bool all_triples = true;
};

/// The distinct line factors of the split conics of a census.
inline LineArrangement split_conic_lines(const CensusResult& census, const std::vector<ProjPoint>& pts) {
  std::set<Line> lines;
  for (const auto& c : census.conics)
    if (c.kind == ConicKind::two_lines) lines.insert(c.lines.begin(), c.lines.end());
  LineArrangement a;
  a.lines.assign(lines.begin(), lines.end());
  std::sort(a.lines.begin(), a.lines.end(), KeyLess{});
  a.summary = summarize_arrangement(a.lines, pts);
  for (const auto& l : a.lines) {
    std::vector<int> on;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (incident(l, pts[i])) on.push_back(static_cast<int>(i));
    if (on.size() != 3) {
      a.all_triples = false;
      continue;
    }
    a.triples.push_back({on[0], on[1], on[2]});
  }
  return a;
}

struct ProductIntegrality {
  bool integral = false;
  HomPoly product;      // raw product of the normalized line equations
  HomPoly primitive;    // product / scale: coprime integer coefficients when integral
  FieldElement scale;   // the single overall scalar removed
};

/// Multiplies the normalized line equations and tests whether one overall
/// scalar turns every coefficient into a rational integer.
inline ProductIntegrality lines_product_integrality(const std::vector<Line>& lines) {
  ProductIntegrality out;
  out.product = product_of_lines(lines);
  if (out.product.is_zero()) return out;
  const FieldElement lead = out.product.terms().begin()->second;
  HomPoly monic = out.product.scaled(lead.inverse());
  for (const auto& [e, c] : monic.terms())
    if (!c.is_rational()) {
      out.scale = lead;
      out.primitive = monic;
      return out;
    }
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& [e, c] : monic.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c[0].get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c[0].get_num_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  out.primitive = monic.scaled(FieldElement(factor));
  out.scale = lead.scaled(Rational(1 / factor));
  out.integral = true;
  for (const auto& [e, c] : out.primitive.terms())
    if (c.classify() != FieldClass::rational_integer) out.integral = false;
  return out;
}

/// x -> y -> z -> x applied to exponents.
inline HomPoly cycle_variables(const HomPoly& p) {
  HomPoly r;
  for (const auto& [e, c] : p.terms()) r += HomPoly::monomial(c, e[2], e[0], e[1]);
  return r;
}

enum class ResidualClass { tangent_at_member, flex, other };

inline std::string to_string(ResidualClass c) {
  switch (c) {
    case ResidualClass::tangent_at_member: return "tangent_at_member";
    case ResidualClass::flex: return "flex";
    case ResidualClass::other: return "other";
  }
  return "?";
}

struct FivePointScan {
  std::size_t five_subsets = 0;
  std::size_t completing = 0;  // conic holds a sixth point of the list
  std::size_t scanned = 0;     // conic holds exactly these five
  std::size_t not_unique = 0;
  std::map<ResidualClass, std::size_t> classes;
  // Each residual lay on its conic, each tangent residual had matching
  // tangent lines, and no conic met the cubic in more than 6 points.
  bool geometry_ok = true;
};

/// For every 5-subset whose unique conic contains no sixth listed point,
/// locate the sixth intersection with the cubic through the group law and
/// classify it.
inline FivePointScan five_point_scan(const std::vector<ProjPoint>& pts, const CensusResult& census,
                                     const CubicGroup& group, const LevelStructure& ls,
                                     const std::vector<ProjPoint>& flexes, unsigned threads = 1,
                                     const ProgressFn& progress = {}) {
  std::set<SubsetMask> completing;
  for (const auto& c : census.conics) {
    const SubsetMask m = to_mask(c.members);
    for (auto i : c.members) completing.insert(m & ~(SubsetMask{1} << i));
  }
  const std::set<ProjPoint> flex_set(flexes.begin(), flexes.end());
  const auto labels = alpha_labels(ls, group, pts);
  const auto grad = group.cubic().gradient();
  const int n = static_cast<int>(pts.size());

  struct Out {
    std::size_t five = 0, completing = 0, scanned = 0, not_unique = 0;
    std::map<ResidualClass, std::size_t> classes;
    bool ok = true;
  };
  std::vector<Out> outs(static_cast<std::size_t>(n));
  for_each_chunk(
      static_cast<std::size_t>(n), threads,
      [&](std::size_t chunk) {
        Out& o = outs[chunk];
        std::array<int, 5> idx{};
        idx[0] = static_cast<int>(chunk);
        auto rec = [&](auto&& self, int depth, int start) -> void {
          if (depth == 5) {
            ++o.five;
            SubsetMask m = 0;
            for (int i : idx) m |= SubsetMask{1} << i;
            if (completing.contains(m)) {
              ++o.completing;
              return;
            }
            std::vector<ProjPoint> five;
            Z6Pair sum{0, 0};
            for (int i : idx) {
              five.push_back(pts[static_cast<std::size_t>(i)]);
              sum = z6_add(sum, labels[static_cast<std::size_t>(i)]);
            }
            ConicFit fit = conic_through(five);
            if (fit.kind != ConicFit::Kind::unique) {
              ++o.not_unique;
              o.ok = false;
              return;
            }
            ++o.scanned;
            const ProjPoint& r = ls.point_of.at(z6_neg(sum)).point();
            if (!fit.conic->contains(r)) o.ok = false;
            auto member = std::find(five.begin(), five.end(), r);
            ResidualClass cls = ResidualClass::other;
            if (member != five.end()) {
              cls = ResidualClass::tangent_at_member;
              Vec3 curve_tangent{grad[0].evaluate(r), grad[1].evaluate(r), grad[2].evaluate(r)};
              if (!is_zero(cross(curve_tangent, fit.conic->polar(r.coords())))) o.ok = false;
            } else if (flex_set.contains(r)) {
              cls = ResidualClass::flex;
            } else if (std::find(pts.begin(), pts.end(), r) != pts.end()) {
              o.ok = false;  // a sixth listed point would have made it a completing subset
            }
            ++o.classes[cls];
            return;
          }
          for (int k = start; k <= n - (5 - depth); ++k) {
            idx[static_cast<std::size_t>(depth)] = k;
            self(self, depth + 1, k + 1);
          }
        };
        if (idx[0] <= n - 5) rec(rec, 1, idx[0] + 1);
      },
      progress);

  FivePointScan scan;
  for (auto& o : outs) {
    scan.five_subsets += o.five;
    scan.completing += o.completing;
    scan.scanned += o.scanned;
    scan.not_unique += o.not_unique;
    for (auto [k, v] : o.classes) scan.classes[k] += v;
    scan.geometry_ok = scan.geometry_ok && o.ok;
  }
  for (auto c : {ResidualClass::tangent_at_member, ResidualClass::flex, ResidualClass::other}) scan.classes[c] += 0;
  return scan;
}

}  // namespace sextactica
