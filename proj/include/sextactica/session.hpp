#pragma once

// Lazily computed pipeline shared by the verifier, the emitters and the CLI.
// Every stage is computed at most once per session.

#include <optional>
#include <vector>

#include "sextactica/cayley.hpp"
#include "sextactica/census.hpp"
#include "sextactica/fermat.hpp"
#include "sextactica/grouplaw.hpp"
#include "sextactica/parallel.hpp"

namespace sextactica {

struct SessionOptions {
  unsigned threads = 1;
  long psi_weight_base = 20;
  ProgressFn progress;  // called as census chunks finish
};

class Session {
 public:
  explicit Session(SessionOptions opts = {}) : opts_(std::move(opts)) {}

  const SessionOptions& options() const { return opts_; }

  const HomPoly& cubic() {
    if (!cubic_) cubic_ = fermat_cubic();
    return *cubic_;
  }
  const HessianBundle& hessian_bundle() {
    if (!hessian_) hessian_ = hessian(cubic());
    return *hessian_;
  }
  const std::vector<ProjPoint>& flexes() {
    if (!flexes_) flexes_ = flex_points();
    return *flexes_;
  }
  const std::vector<Line>& hesse() {
    if (!hesse_) hesse_ = hesse_lines(flexes());
    return *hesse_;
  }
  const std::vector<ProjPoint>& triple_points() {
    if (!triples_) triples_ = dual_hesse_triple_points();
    return *triples_;
  }
  const SecondHessianParts& h2_parts() {
    if (!h2_) h2_ = second_hessian(cubic(), opts_.psi_weight_base);
    return *h2_;
  }
  const std::vector<ProjPoint>& sextactic() {
    if (!sextactic_) sextactic_ = sextactic_points(h2_parts().h2);
    return *sextactic_;
  }
  const CensusResult& census() {
    if (!census_) census_ = conic_census(sextactic(), opts_.threads, opts_.progress);
    return *census_;
  }
  const LineArrangement& split_lines() {
    if (!lines_) lines_ = split_conic_lines(census(), sextactic());
    return *lines_;
  }
  const ProductIntegrality& lines_product() {
    if (!product_) product_ = lines_product_integrality(split_lines().lines);
    return *product_;
  }
  const CubicGroup& group() {
    if (!group_) group_.emplace(CubicGroup(cubic(), flexes().front()));
    return *group_;
  }
  const std::vector<CurvePoint>& candidates() {
    if (!candidates_) candidates_ = fermat_six_torsion_candidates(group(), flexes(), sextactic());
    return *candidates_;
  }
  const LevelStructure& level() {
    if (!level_) level_.emplace(build_level_structure(group(), candidates()));
    return *level_;
  }
  const std::vector<Z6Pair>& sextactic_labels() {
    if (!labels_) labels_ = alpha_labels(level(), group(), sextactic());
    return *labels_;
  }
  const FivePointScan& five_point() {
    if (!five_)
      five_ = five_point_scan(sextactic(), census(), group(), level(), flexes(), opts_.threads, opts_.progress);
    return *five_;
  }

 private:
  SessionOptions opts_;
  std::optional<HomPoly> cubic_;
  std::optional<HessianBundle> hessian_;
  std::optional<std::vector<ProjPoint>> flexes_;
  std::optional<std::vector<Line>> hesse_;
  std::optional<std::vector<ProjPoint>> triples_;
  std::optional<SecondHessianParts> h2_;
  std::optional<std::vector<ProjPoint>> sextactic_;
  std::optional<CensusResult> census_;
  std::optional<LineArrangement> lines_;
  std::optional<ProductIntegrality> product_;
  std::optional<CubicGroup> group_;
  std::optional<std::vector<CurvePoint>> candidates_;
  std::optional<LevelStructure> level_;
  std::optional<std::vector<Z6Pair>> labels_;
  std::optional<FivePointScan> five_;
};

}  // namespace sextactica
