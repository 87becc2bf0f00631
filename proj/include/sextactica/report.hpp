#pragma once

// Verification runs: each scope recomputes its objects, compares them with
// the published constants and collects the outcome in a CensusReport.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sextactica/expected.hpp"
#include "sextactica/oracles.hpp"
#include "sextactica/session.hpp"

namespace sextactica {

using Json = nlohmann::ordered_json;

enum class Scope { all, flexes, hessians, sextactic, conics, arrangement, group };

inline const std::vector<std::pair<std::string, Scope>>& scope_names() {
  static const std::vector<std::pair<std::string, Scope>> names{
      {"all", Scope::all},         {"flexes", Scope::flexes},           {"hessians", Scope::hessians},
      {"sextactic", Scope::sextactic}, {"conics", Scope::conics}, {"arrangement", Scope::arrangement},
      {"group", Scope::group},
  };
  return names;
}

inline std::string to_string(Scope s) {
  for (const auto& [n, v] : scope_names())
    if (v == s) return n;
  return "?";
}

inline Scope parse_scope(const std::string& s) {
  for (const auto& [n, v] : scope_names())
    if (n == s) return v;
  throw UnknownTarget("unknown scope: " + s);
}

// ---- JSON helpers -------------------------------------------------------

inline Json to_json(const FieldElement& a) { return a.serialize(); }

inline Json to_json(const Vec3& v) { return Json::array({to_json(v[0]), to_json(v[1]), to_json(v[2])}); }

inline Json to_json(const ArrangementSummary& s) {
  Json ppl = Json::object(), lpp = Json::object();
  for (auto [k, m] : s.points_per_line) ppl[std::to_string(k)] = m;
  for (auto [k, m] : s.lines_per_point) lpp[std::to_string(k)] = m;
  return Json{{"lines", s.line_count},          {"points", s.point_count}, {"points_per_line", ppl},
              {"lines_per_point", lpp},         {"incidences", s.incidences()}, {"signature", s.signature}};
}

inline Json to_json(Z6Pair p) { return Json::array({p[0], p[1]}); }

// ---- report -------------------------------------------------------------

struct Check {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct CensusReport {
  std::string scope;
  Json counts = Json::object();
  Json arrangements = Json::object();
  Json scalars = Json::object();
  Json findings = Json::object();  // recorded outcomes that are not pass/fail checks
  std::vector<Check> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }

  Json to_json() const {
    Json cs = Json::array();
    for (const auto& c : checks)
      cs.push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"expected", c.expected}, {"actual", c.actual}});
    return Json{{"manifest_version", expected::kManifestVersion},
                {"scope", scope},
                {"status", ok() ? "pass" : "fail"},
                {"counts", counts},
                {"arrangements", arrangements},
                {"scalars", scalars},
                {"findings", findings},
                {"checks", cs}};
  }

  std::string summary() const {
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& c : checks) {
      os << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.actual;
      if (!c.pass) os << " (expected " << c.expected << ")";
      os << "\n";
      failed += c.pass ? 0 : 1;
    }
    os << (checks.size() - failed) << "/" << checks.size() << " checks passed\n";
    return os.str();
  }
};

namespace detail {

inline std::string str(bool b) { return b ? "true" : "false"; }
inline std::string str(std::size_t n) { return std::to_string(n); }
inline std::string str(int n) { return std::to_string(n); }
inline std::string str(std::string_view s) { return std::string(s); }

class Recorder {
 public:
  explicit Recorder(CensusReport& r) : r_(r) {}

  template <class T, class U>
  bool eq(const std::string& name, const T& expected, const U& actual) {
    const bool pass = expected == actual;
    r_.checks.push_back({name, pass, str(expected), str(actual)});
    return pass;
  }
  bool holds(const std::string& name, bool value, const std::string& detail = {}) {
    r_.checks.push_back({name, value, "true", detail.empty() ? str(value) : detail});
    return value;
  }

 private:
  CensusReport& r_;
};

inline bool same_set(const std::vector<ProjPoint>& a, const std::vector<ProjPoint>& b) {
  return std::set<ProjPoint>(a.begin(), a.end()) == std::set<ProjPoint>(b.begin(), b.end());
}

inline void verify_flexes(Session& s, CensusReport& r) {
  Recorder rec(r);
  const auto& hb = s.hessian_bundle();
  const auto lam = proportional(hb.h, xyz_monomial());
  rec.holds("hessian_proportional_to_xyz", lam.has_value());
  if (lam) r.scalars["H(F)/xyz"] = to_json(*lam);

  const auto& flexes = s.flexes();
  rec.eq("flex_count", expected::kFlexes, flexes.size());
  rec.holds("flexes_match_reference_list", same_set(flexes, reference::flex_points()));
  bool on_both = true;
  for (const auto& p : flexes) on_both = on_both && s.cubic().evaluate(p).is_zero() && hb.h.evaluate(p).is_zero();
  rec.holds("flexes_on_F_and_H", on_both);
  bool three_each = true;
  for (std::size_t k = 0; k < 3; ++k)
    three_each = three_each && std::count_if(flexes.begin(), flexes.end(), [k](const ProjPoint& p) {
                                 return p[k].is_zero();
                               }) == static_cast<long>(expected::kFlexesPerCoordinateLine);
  rec.holds("three_flexes_per_coordinate_line", three_each);

  const auto hesse = summarize_arrangement(s.hesse(), flexes);
  r.arrangements["hesse"] = to_json(hesse);
  rec.eq("hesse_line_count", expected::kHesseLines, hesse.line_count);
  rec.eq("hesse_signature", expected::kHesseSignature, hesse.signature);

  const auto& triples = s.triple_points();
  const auto dual = summarize_arrangement(dual_hesse_lines(), triples);
  r.arrangements["dual_hesse"] = to_json(dual);
  rec.eq("dual_hesse_line_count", expected::kDualHesseLines, dual.line_count);
  rec.eq("dual_hesse_triple_points", expected::kTriplePoints, triples.size());
  rec.eq("dual_hesse_signature", expected::kDualHesseSignature, dual.signature);

  const HomPoly w = dual_hesse_witness();
  std::map<int, std::size_t> orders;
  for (const auto& p : triples) ++orders[vanishing_order(w, p)];
  Json ord = Json::object();
  for (auto [k, n] : orders) ord[std::to_string(k)] = n;
  r.findings["witness_vanishing_orders"] = ord;
  r.counts["witness_terms"] = w.term_count();
  rec.holds("witness_vanishing_order_3_at_triple_points",
            orders.size() == 1 && orders.begin()->first == expected::kWitnessVanishingOrder &&
                orders.begin()->second == triples.size());
}

inline void verify_hessians(Session& s, CensusReport& r) {
  Recorder rec(r);
  const auto& parts = s.h2_parts();
  const HomPoly w = dual_hesse_witness();
  const auto lam = proportional(parts.h2, w);
  rec.holds("h2_proportional_to_witness", lam.has_value());
  if (lam) r.scalars["H2(F)/witness"] = to_json(*lam);
  rec.eq("h2_degree", expected::second_hessian_degree(3), parts.h2.is_zero() ? -1 : *parts.h2.degree());

  bool leibniz = true;
  const auto og = parts.omega.gradient();
  for (std::size_t u = 0; u < 3; ++u) leibniz = leibniz && og[u] == parts.omega_gamma_grad[u] + parts.omega_h_grad[u];
  rec.holds("omega_leibniz_identity", leibniz);
  rec.holds("psi_nonzero_degree_6", !parts.psi.is_zero() && *parts.psi.degree() == 6);

  const HomPoly ext = extended_fermat_product(s.cubic());
  rec.holds("extended_fermat_product_proportional", proportional(ext, xyz_monomial() * w).has_value());

  // Historical coefficient: recorded, not gated.
  const auto mutated = second_hessian(s.cubic(), expected::kHistoricalPsiWeightBase).h2;
  const auto mlam = proportional(mutated, w);
  Json m = {{"psi_weight_base", expected::kHistoricalPsiWeightBase}, {"proportional_to_witness", mlam.has_value()}};
  if (mlam) m["scalar"] = to_json(*mlam);
  r.findings["historical_coefficient_on_F"] = m;
}

inline void verify_sextactic(Session& s, CensusReport& r) {
  Recorder rec(r);
  const auto& pts = s.sextactic();
  rec.eq("sextactic_count", expected::kSextactic, std::set<ProjPoint>(pts.begin(), pts.end()).size());
  rec.holds("sextactic_match_reference_list", same_set(pts, reference::sextactic_points()));
  bool on = true;
  for (const auto& p : pts) on = on && s.cubic().evaluate(p).is_zero() && s.h2_parts().h2.evaluate(p).is_zero();
  rec.holds("sextactic_on_F_and_H2", on);
  rec.eq("bezout_3_times_9", expected::kSextactic, 3 * dual_hesse_lines().size());
  const HomPoly ext = extended_fermat_product(s.cubic());
  bool vanish = true;
  for (const auto& p : s.flexes()) vanish = vanish && ext.evaluate(p).is_zero();
  for (const auto& p : pts) vanish = vanish && ext.evaluate(p).is_zero();
  rec.holds("extended_product_vanishes_on_36_points", vanish);
}

inline Json per_point_json(const CensusResult& c) {
  Json pp = Json::object();
  for (std::size_t i = 0; i < c.point_count; ++i)
    pp[point_label('S', i)] = {{"total", c.per_point_total[i]}, {"smooth", c.per_point_smooth[i]}};
  return pp;
}

inline void verify_conics(Session& s, CensusReport& r) {
  Recorder rec(r);
  const auto& c = s.census();
  const std::size_t smooth = c.count(ConicKind::smooth), split = c.count(ConicKind::two_lines),
                    dbl = c.count(ConicKind::double_line);
  r.counts["subsets"] = c.subsets_scanned;
  r.counts["total"] = c.total();
  r.counts["smooth"] = smooth;
  r.counts["split"] = split;
  r.counts["double_line"] = dbl;
  r.counts["per_point"] = per_point_json(c);

  rec.eq("six_subsets_scanned", expected::kSixSubsets, c.subsets_scanned);
  rec.eq("conic_total", expected::kConics, c.total());
  rec.eq("conic_smooth", expected::kSmoothConics, smooth);
  rec.eq("conic_split", expected::kSplitConics, split);
  rec.eq("conic_double_line", std::size_t{0}, dbl);
  rec.eq("conic_pencils", std::size_t{0}, c.pencils);
  rec.holds("partition_smooth_plus_split", smooth + split + dbl == c.total());
  rec.holds("identity_total_minus_smooth_is_split", expected::kConics - expected::kSmoothConics == expected::kSplitConics);
  rec.holds("identity_per_point_total", expected::kConics * 6 == expected::kConicsPerPoint * expected::kSextactic);
  rec.holds("identity_per_point_smooth",
            expected::kSmoothConics * 6 == expected::kSmoothConicsPerPoint * expected::kSextactic);
  const auto [tmin, tmax] = std::minmax_element(c.per_point_total.begin(), c.per_point_total.end());
  const auto [smin, smax] = std::minmax_element(c.per_point_smooth.begin(), c.per_point_smooth.end());
  rec.holds("per_point_total_uniform", *tmin == *tmax, "min " + str(*tmin) + " max " + str(*tmax));
  rec.eq("per_point_total", expected::kConicsPerPoint, *tmin);
  rec.holds("per_point_smooth_uniform", *smin == *smax, "min " + str(*smin) + " max " + str(*smax));
  rec.eq("per_point_smooth", expected::kSmoothConicsPerPoint, *smin);
  rec.holds("bezout_no_conic_repeats", c.bezout_ok);
  rec.holds("split_conics_three_points_per_line_vertex_not_sextactic", c.split_lines_ok);

  const auto& scan = s.five_point();
  Json cls = Json::object();
  for (auto [k, v] : scan.classes) cls[to_string(k)] = v;
  r.findings["five_point_scan"] = {
      {"five_subsets", scan.five_subsets},
      {"completing_to_six", scan.completing},
      {"scanned", scan.scanned},
      {"residual_classes", cls},
      {"all_tangent_at_member", scan.classes.at(ResidualClass::tangent_at_member) == scan.scanned},
  };
  rec.eq("five_subsets_enumerated", expected::kFiveSubsets, scan.five_subsets);
  rec.holds("five_point_conics_bezout_consistent", scan.geometry_ok && scan.not_unique == 0);
}

inline void verify_arrangement(Session& s, CensusReport& r) {
  Recorder rec(r);
  const auto& a = s.split_lines();
  r.arrangements["split_lines"] = to_json(a.summary);
  rec.eq("split_line_count", expected::kSplitLines, a.lines.size());
  rec.eq("split_line_signature", expected::kSplitLineSignature, a.summary.signature);
  rec.eq("split_line_incidences", expected::kSplitLines * 3, a.summary.incidences());
  rec.holds("split_conic_vertices_not_sextactic", s.census().split_lines_ok);
  const auto& prod = s.lines_product();
  rec.eq("split_line_product_integral", expected::kSplitLineProductIntegral, prod.integral);
  rec.eq("split_line_product_degree", 81, prod.product.is_zero() ? -1 : *prod.product.degree());
  rec.holds("split_line_product_cyclic_invariant",
            proportional(cycle_variables(prod.primitive), prod.primitive).has_value());
  r.counts["split_line_product_terms"] = prod.primitive.term_count();
  r.scalars["split_line_product/primitive"] = to_json(prod.scale);
}

inline void verify_group(Session& s, CensusReport& r) {
  Recorder rec(r);
  const auto& g = s.group();
  const auto& cand = s.candidates();
  const auto f3 = torsion(g, 3, cand), f6 = torsion(g, 6, cand), f2 = torsion(g, 2, cand);
  std::vector<ProjPoint> f3p;
  for (const auto& p : f3) f3p.push_back(p.point());
  rec.eq("f3_count", expected::kFlexes, f3.size());
  rec.holds("f3_equals_flexes", same_set(f3p, s.flexes()));
  rec.eq("f6_count", expected::kSixTorsion, f6.size());
  rec.eq("f2_count", expected::kTwoTorsion, f2.size());
  bool sext_not_f3 = true;
  for (const auto& p : s.sextactic()) sext_not_f3 = sext_not_f3 && g.scalar_mul(3, g.make_point(p)) != g.origin();
  rec.holds("sextactic_is_f6_minus_f3", sext_not_f3 && f6.size() == f3.size() + s.sextactic().size());

  const auto& ls = s.level();
  rec.holds("alpha_bijective_homomorphic", ls.label.size() == expected::kSixTorsion);
  bool flex_even = true;
  for (const auto& p : s.flexes()) {
    auto l = ls.alpha(g.make_point(p));
    flex_even = flex_even && l[0] % 2 == 0 && l[1] % 2 == 0;
  }
  rec.holds("alpha_flexes_even_pairs", flex_even);
  r.findings["level_structure"] = {{"origin", point_label('P', 0)},
                                   {"gen1", to_json(ls.gen1.point().coords())},
                                   {"gen2", to_json(ls.gen2.point().coords())}};

  const auto& labels = s.sextactic_labels();
  const auto oracle_triples = oracle_collinear_triples(labels);
  rec.eq("oracle_collinear_triples", expected::kSplitLines, oracle_triples.size());
  const auto& a = s.split_lines();
  std::set<std::array<int, 3>> geo(a.triples.begin(), a.triples.end()),
      orc(oracle_triples.begin(), oracle_triples.end());
  rec.holds("oracle_triples_equal_geometric_lines", a.all_triples && geo == orc);

  std::vector<SubsetMask> census_masks;
  for (const auto& c : s.census().conics) census_masks.push_back(to_mask(c.members));
  std::sort(census_masks.begin(), census_masks.end());
  Json table = Json::array();
  std::vector<std::string> matching;
  std::map<ConicPredicate, std::size_t> counts;
  for (auto pred : kConicPredicates) {
    const auto masks = oracle_conic_subsets(labels, pred);
    const bool same = masks == census_masks;
    counts[pred] = masks.size();
    if (masks.size() == expected::kConics) matching.push_back(to_string(pred));
    table.push_back({{"predicate", to_string(pred)}, {"count", masks.size()}, {"equals_census_subsets", same}});
  }
  r.findings["conic_predicates"] = table;
  r.findings["conic_predicate_matching_census"] = matching.size() == 1 ? Json(matching.front()) : Json(matching);
  rec.eq("predicates_matching_8244", std::size_t{1}, matching.size());
  rec.holds("matching_predicate_equals_census_subset_for_subset",
            matching.size() == 1 && matching.front() == to_string(ConicPredicate::sum_zero) &&
                oracle_conic_subsets(labels, ConicPredicate::sum_zero) == census_masks);
  rec.holds("sum_two_torsion_contains_sum_zero",
            counts[ConicPredicate::sum_two_torsion] >= counts[ConicPredicate::sum_zero]);

  // Other generator pairs relabel but preserve every count.
  bool independent = true;
  for (std::size_t rank = 1; rank <= 3; ++rank) {
    const auto alt = build_level_structure(g, cand, rank);
    const auto alt_labels = alpha_labels(alt, g, s.sextactic());
    independent = independent && oracle_collinear_triples(alt_labels).size() == oracle_triples.size();
    for (auto pred : kConicPredicates)
      independent = independent && oracle_conic_subsets(alt_labels, pred).size() == counts[pred];
  }
  rec.holds("counts_independent_of_generators", independent);
}

}  // namespace detail

/// Runs one scope (or all) and returns the report. Throws sextactica::Error
/// only on internal arithmetic failures.
inline CensusReport verify(Session& s, Scope scope) {
  CensusReport r;
  r.scope = to_string(scope);
  auto want = [scope](Scope x) { return scope == Scope::all || scope == x; };
  if (want(Scope::flexes)) detail::verify_flexes(s, r);
  if (want(Scope::hessians)) detail::verify_hessians(s, r);
  if (want(Scope::sextactic)) detail::verify_sextactic(s, r);
  if (want(Scope::conics)) detail::verify_conics(s, r);
  if (want(Scope::arrangement)) detail::verify_arrangement(s, r);
  if (want(Scope::group)) detail::verify_group(s, r);
  return r;
}

/// The conic census in its own report shape.
inline Json census_json(Session& s) {
  const auto& c = s.census();
  const auto& a = s.split_lines();
  Json lines = Json::array();
  for (const auto& l : a.lines) lines.push_back(HomPoly::linear(l.coords()).to_text());
  return Json{{"total", c.total()},
              {"smooth", c.count(ConicKind::smooth)},
              {"split", c.count(ConicKind::two_lines)},
              {"per_point", detail::per_point_json(c)},
              {"lines81", lines},
              {"signature", a.summary.signature}};
}

}  // namespace sextactica
