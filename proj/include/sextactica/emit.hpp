#pragma once

// Deterministic text renderings of computed objects.

#include <sstream>
#include <string>

#include "sextactica/report.hpp"

namespace sextactica {

enum class EmitFormat { json, csv, poly_text };

inline EmitFormat parse_format(const std::string& s) {
  if (s == "json") return EmitFormat::json;
  if (s == "csv") return EmitFormat::csv;
  if (s == "poly-text") return EmitFormat::poly_text;
  throw UnknownTarget("unknown format: " + s);
}

inline const std::vector<std::string>& emit_targets() {
  static const std::vector<std::string> t{"points", "lines", "conics", "h2-parts", "group-table"};
  return t;
}

namespace detail {

inline std::string csv_coords(const Vec3& v) {
  std::string s;
  for (const auto& c : v)
    for (const auto& part : c.serialize()) s += "," + part;
  return s;
}

inline std::string csv_header_coords(const char* prefix, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < FieldElement::kDim; ++k)
      s += "," + std::string(prefix) + std::to_string(i) + "_" + std::to_string(k);
  return s;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct LabeledPoint {
  std::string label, kind;
  ProjPoint point;
};

inline std::vector<LabeledPoint> labeled_points(Session& s) {
  std::vector<LabeledPoint> out;
  for (std::size_t i = 0; i < s.flexes().size(); ++i) out.push_back({point_label('P', i), "flex", s.flexes()[i]});
  for (std::size_t i = 0; i < s.sextactic().size(); ++i)
    out.push_back({point_label('S', i), "sextactic", s.sextactic()[i]});
  return out;
}

inline std::vector<std::string> member_labels(const Line& l, const std::vector<ProjPoint>& pts) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (incident(l, pts[i])) out.push_back(point_label('S', i));
  return out;
}

inline std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

}  // namespace detail

inline std::string emit_points(Session& s, EmitFormat f) {
  const auto pts = detail::labeled_points(s);
  std::ostringstream os;
  switch (f) {
    case EmitFormat::json: {
      Json arr = Json::array();
      for (const auto& p : pts)
        arr.push_back({{"label", p.label}, {"kind", p.kind}, {"coords", to_json(p.point.coords())}, {"pretty", p.point.to_pretty()}});
      return detail::dump(arr);
    }
    case EmitFormat::csv:
      os << "label,kind" << detail::csv_header_coords("c", 3) << "\n";
      for (const auto& p : pts) os << p.label << "," << p.kind << detail::csv_coords(p.point.coords()) << "\n";
      return os.str();
    case EmitFormat::poly_text:
      for (const auto& p : pts) os << p.label << " " << p.point.to_pretty() << "\n";
      return os.str();
  }
  return {};
}

/// The 81 lines cut out by split conics.
inline std::string emit_lines(Session& s, EmitFormat f) {
  const auto& a = s.split_lines();
  std::ostringstream os;
  switch (f) {
    case EmitFormat::json: {
      Json arr = Json::array();
      for (const auto& l : a.lines)
        arr.push_back({{"equation", HomPoly::linear(l.coords()).to_text()},
                       {"coeffs", to_json(l.coords())},
                       {"points", detail::member_labels(l, s.sextactic())}});
      return detail::dump(arr);
    }
    case EmitFormat::csv:
      os << "points" << detail::csv_header_coords("a", 3) << "\n";
      for (const auto& l : a.lines)
        os << detail::join(detail::member_labels(l, s.sextactic()), " ") << detail::csv_coords(l.coords()) << "\n";
      return os.str();
    case EmitFormat::poly_text:
      for (const auto& l : a.lines) os << HomPoly::linear(l.coords()).to_text() << "\n";
      return os.str();
  }
  return {};
}

inline std::string emit_conics(Session& s, EmitFormat f) {
  const auto& c = s.census();
  auto members = [](const CensusConic& q) {
    std::vector<std::string> m;
    for (auto i : q.members) m.push_back(point_label('S', i));
    return m;
  };
  std::ostringstream os;
  switch (f) {
    case EmitFormat::json: {
      Json arr = Json::array();
      for (const auto& q : c.conics) {
        Json coeffs = Json::array();
        for (const auto& a : q.conic.coeffs()) coeffs.push_back(to_json(a));
        Json rec{{"points", members(q)}, {"kind", to_string(q.kind)}, {"coeffs", coeffs}};
        if (q.kind == ConicKind::two_lines) {
          Json ls = Json::array();
          for (const auto& l : q.lines) ls.push_back(HomPoly::linear(l.coords()).to_text());
          rec["lines"] = ls;
        }
        arr.push_back(std::move(rec));
      }
      return detail::dump(arr);
    }
    case EmitFormat::csv:
      os << "points,kind";
      for (const char* m : {"xx", "yy", "zz", "xy", "xz", "yz"})
        for (std::size_t k = 0; k < FieldElement::kDim; ++k) os << "," << m << "_" << k;
      os << "\n";
      for (const auto& q : c.conics) {
        os << detail::join(members(q), " ") << "," << to_string(q.kind);
        for (const auto& a : q.conic.coeffs())
          for (const auto& part : a.serialize()) os << "," << part;
        os << "\n";
      }
      return os.str();
    case EmitFormat::poly_text:
      for (const auto& q : c.conics) os << q.conic.to_poly().to_text() << "\n";
      return os.str();
  }
  return {};
}

inline std::vector<std::pair<std::string, HomPoly>> h2_part_list(const SecondHessianParts& p) {
  std::vector<std::pair<std::string, HomPoly>> v{{"omega", p.omega}};
  const char* u = "xyz";
  for (std::size_t i = 0; i < 3; ++i) v.emplace_back(std::string("omega_gamma_") + u[i], p.omega_gamma_grad[i]);
  for (std::size_t i = 0; i < 3; ++i) v.emplace_back(std::string("omega_h_") + u[i], p.omega_h_grad[i]);
  v.emplace_back("psi", p.psi);
  v.emplace_back("h2", p.h2);
  return v;
}

inline std::string emit_h2_parts(const SecondHessianParts& parts, EmitFormat f) {
  const auto list = h2_part_list(parts);
  std::ostringstream os;
  switch (f) {
    case EmitFormat::json: {
      Json j = Json::object();
      for (const auto& [name, p] : list) j[name] = p.to_text();
      return detail::dump(j);
    }
    case EmitFormat::csv:
      os << "part,polynomial\n";
      for (const auto& [name, p] : list) os << name << ",\"" << p.to_text() << "\"\n";
      return os.str();
    case EmitFormat::poly_text:
      for (const auto& [name, p] : list) os << name << " = " << p.to_text() << "\n";
      return os.str();
  }
  return {};
}

inline Json group_table_json(Session& s) {
  const auto& g = s.group();
  const auto& ls = s.level();
  Json arr = Json::array();
  for (const auto& p : detail::labeled_points(s)) {
    const CurvePoint cp = g.make_point(p.point);
    arr.push_back({{"point", p.label}, {"label", to_json(ls.alpha(cp))}, {"order", g.order(cp).value_or(0)}});
  }
  return arr;
}

inline Json predicate_table_json(Session& s) {
  std::vector<SubsetMask> census_masks;
  for (const auto& c : s.census().conics) census_masks.push_back(to_mask(c.members));
  std::sort(census_masks.begin(), census_masks.end());
  Json arr = Json::array();
  for (auto pred : kConicPredicates) {
    const auto masks = oracle_conic_subsets(s.sextactic_labels(), pred);
    arr.push_back({{"predicate", to_string(pred)},
                   {"count", masks.size()},
                   {"geometric_total", census_masks.size()},
                   {"equals_census_subsets", masks == census_masks}});
  }
  return arr;
}

inline std::string emit_group_table(Session& s, EmitFormat f) {
  const Json t = group_table_json(s);
  if (f == EmitFormat::json) return detail::dump(t);
  std::ostringstream os;
  if (f == EmitFormat::csv) os << "point,a,b,order\n";
  for (const auto& r : t) {
    const auto sep = f == EmitFormat::csv ? "," : " ";
    os << r["point"].get<std::string>() << sep << r["label"][0].get<int>() << sep << r["label"][1].get<int>() << sep
       << r["order"].get<int>() << "\n";
  }
  return os.str();
}

inline std::string emit(Session& s, const std::string& what, EmitFormat f) {
  if (what == "points") return emit_points(s, f);
  if (what == "lines") return emit_lines(s, f);
  if (what == "conics") return emit_conics(s, f);
  if (what == "h2-parts") return emit_h2_parts(s.h2_parts(), f);
  if (what == "group-table") return emit_group_table(s, f);
  throw UnknownTarget("unknown emit target: " + what);
}

}  // namespace sextactica
