// sextactica: command-line front end.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 internal or usage error.
// Reports go to stdout; progress goes to stderr.

#include <unistd.h>

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sextactica.hpp"

using namespace sextactica;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInternal = 2;

ProgressFn stderr_progress(const char* what) {
  if (!isatty(STDERR_FILENO)) return {};
  return [what](std::size_t done, std::size_t total) {
    std::cerr << "\r" << what << ": " << done << "/" << total << (done == total ? "\n" : "") << std::flush;
  };
}

void write_out(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path + " for writing");
  f << text;
  if (!f) throw Error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Approximate complex value, eps = exp(2 pi i / 3), mu = 2^(1/3). Display only.
std::complex<double> approx(const FieldElement& a) {
  const std::complex<double> eps(-0.5, std::sqrt(3.0) / 2), mu(std::cbrt(2.0), 0);
  const std::complex<double> basis[6] = {1.0, eps, mu, eps * mu, mu * mu, eps * mu * mu};
  std::complex<double> z = 0;
  for (std::size_t i = 0; i < 6; ++i) z += a[i].get_d() * basis[i];
  return z;
}

std::string approx_point(const ProjPoint& p) {
  std::ostringstream os;
  os.precision(6);
  os << "~(";
  for (std::size_t i = 0; i < 3; ++i) {
    auto z = approx(p[i]);
    os << (i ? " : " : "") << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  }
  return os.str() + ")";
}

struct Options {
  unsigned threads = 0;
  long psi_weight = expected::kPsiWeightBase;
};

Session make_session(const Options& o, const char* progress_label = "census") {
  SessionOptions so;
  so.threads = resolve_thread_count(o.threads);
  so.psi_weight_base = o.psi_weight;
  so.progress = stderr_progress(progress_label);
  return Session(so);
}

std::size_t parse_point_label(const std::string& s) {
  if (s.size() < 2 || s[0] != 'S') throw UnknownTarget("expected a label S1..S27, got " + s);
  std::size_t idx = 0;
  try {
    idx = std::stoul(s.substr(1));
  } catch (const std::exception&) {
    throw UnknownTarget("expected a label S1..S27, got " + s);
  }
  if (idx < 1 || idx > expected::kSextactic) throw UnknownTarget("expected a label S1..S27, got " + s);
  return idx - 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on the Fermat cubic x^3 + y^3 + z^3: flexes, second Hessian, sextactic points, "
               "conic census, line arrangements and group-law oracles."};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--threads", opt.threads, "worker threads (default: hardware; SEXTACTICA_THREADS overrides)");

  auto* flexes = app.add_subcommand("flexes", "flex points and the Hesse arrangement");
  bool flexes_json = false;
  flexes->add_flag("--json", flexes_json, "JSON output");

  auto* sh = app.add_subcommand("second-hessian", "Omega, its gradients, Psi and H2 of a curve");
  std::string sh_curve = "fermat", sh_input, sh_format = "poly-text";
  auto* curve_opt = sh->add_option("--curve", sh_curve, "named curve")->check(CLI::IsMember({"fermat"}));
  sh->add_option("--input", sh_input, "file holding a polynomial in text format")->excludes(curve_opt);
  sh->add_option("--psi-weight", opt.psi_weight, "base weight of the Psi term (20 corrected, 40 historical)");
  sh->add_option("--format", sh_format)->check(CLI::IsMember({"json", "csv", "poly-text"}));

  auto* sext = app.add_subcommand("sextactic", "the 27 sextactic points");
  std::string sext_format = "poly-text";
  bool sext_approx = false;
  sext->add_option("--format", sext_format)->check(CLI::IsMember({"json", "csv", "poly-text"}));
  sext->add_flag("--approx", sext_approx, "append approximate complex coordinates (display only)");

  auto* conics = app.add_subcommand("conics", "conics through six sextactic points");
  bool conics_count = false;
  std::string conics_class = "all", conics_through, conics_json;
  conics->add_flag("--count", conics_count, "print counts");
  conics->add_option("--class", conics_class)->check(CLI::IsMember({"all", "smooth", "split"}));
  conics->add_option("--through", conics_through, "restrict to conics through one point, e.g. S11");
  conics->add_option("--json", conics_json, "write the census report to this file ('-' for stdout)");

  auto* arr = app.add_subcommand("arrangement", "line arrangements with their incidence summary");
  std::string arr_which = "hesse";
  arr->add_option("--which", arr_which)->check(CLI::IsMember({"hesse", "dual-hesse", "81lines"}));

  auto* grp = app.add_subcommand("group", "level-6 structure and conic-sum oracles");
  bool grp_table = false, grp_oracle = false;
  grp->add_flag("--table", grp_table, "alpha table as JSON");
  grp->add_flag("--oracle", grp_oracle, "three-predicate comparison as JSON");

  auto* ver = app.add_subcommand("verify", "recompute and compare against the published constants");
  std::string ver_scope = "all", ver_out;
  bool ver_json = false;
  std::vector<std::string> scopes;
  for (const auto& [n, s] : scope_names()) scopes.push_back(n);
  ver->add_option("--scope", ver_scope)->check(CLI::IsMember(scopes));
  ver->add_flag("--json", ver_json, "JSON report on stdout, summary on stderr");
  ver->add_option("--output", ver_out, "write the JSON report to a file");
  ver->add_option("--psi-weight", opt.psi_weight, "base weight of the Psi term (20 corrected, 40 historical)");

  auto* emt = app.add_subcommand("emit", "write computed objects");
  std::string emit_what, emit_format = "json", emit_out;
  emt->add_option("what", emit_what)->required()->check(CLI::IsMember(emit_targets()));
  emt->add_option("--format", emit_format)->check(CLI::IsMember({"json", "csv", "poly-text"}));
  emt->add_option("--output,-o", emit_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInternal;
  }

  try {
    if (*flexes) {
      Session s = make_session(opt);
      if (flexes_json) {
        Json j{{"hessian", s.hessian_bundle().h.to_text()},
               {"flexes", Json::array()},
               {"hesse_lines", Json::array()},
               {"hesse", to_json(summarize_arrangement(s.hesse(), s.flexes()))}};
        for (std::size_t i = 0; i < s.flexes().size(); ++i)
          j["flexes"].push_back({{"label", point_label('P', i)}, {"coords", to_json(s.flexes()[i].coords())}});
        for (const auto& l : s.hesse()) j["hesse_lines"].push_back(HomPoly::linear(l.coords()).to_text());
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "H(F) = " << s.hessian_bundle().h.to_text() << "\n";
        for (std::size_t i = 0; i < s.flexes().size(); ++i)
          std::cout << point_label('P', i) << " " << s.flexes()[i].to_pretty() << "\n";
        for (std::size_t i = 0; i < s.hesse().size(); ++i)
          std::cout << point_label('L', i) << " " << HomPoly::linear(s.hesse()[i].coords()).to_text() << "\n";
        std::cout << "signature " << summarize_arrangement(s.hesse(), s.flexes()).signature << "\n";
      }
      return 0;
    }

    if (*sh) {
      const HomPoly gamma = sh_input.empty() ? fermat_cubic() : HomPoly::parse(read_file(sh_input));
      std::cout << emit_h2_parts(second_hessian(gamma, opt.psi_weight), parse_format(sh_format));
      return 0;
    }

    if (*sext) {
      Session s = make_session(opt);
      if (sext_approx) {
        for (std::size_t i = 0; i < s.sextactic().size(); ++i)
          std::cout << point_label('S', i) << " " << s.sextactic()[i].to_pretty() << "  approx "
                    << approx_point(s.sextactic()[i]) << "\n";
      } else {
        std::cout << emit_points(s, parse_format(sext_format));
      }
      return 0;
    }

    if (*conics) {
      Session s = make_session(opt);
      const auto& c = s.census();
      std::optional<std::size_t> through;
      if (!conics_through.empty()) through = parse_point_label(conics_through);
      std::size_t smooth = 0, split = 0;
      for (const auto& q : c.conics) {
        if (through && std::find(q.members.begin(), q.members.end(), *through) == q.members.end()) continue;
        (q.kind == ConicKind::smooth ? smooth : split) += 1;
      }
      if (conics_count || conics_json.empty()) {
        std::cout << "through " << (through ? conics_through : std::string("any")) << ": ";
        if (conics_class == "all")
          std::cout << "total " << smooth + split << " smooth " << smooth << " split " << split << "\n";
        else
          std::cout << conics_class << " " << (conics_class == "smooth" ? smooth : split) << "\n";
      }
      if (!conics_json.empty()) write_out(census_json(s).dump(2) + "\n", conics_json);
      return 0;
    }

    if (*arr) {
      Session s = make_session(opt);
      std::vector<Line> lines;
      std::vector<ProjPoint> points;
      if (arr_which == "hesse") {
        lines = s.hesse();
        points = s.flexes();
      } else if (arr_which == "dual-hesse") {
        lines = dual_hesse_lines();
        points = s.triple_points();
      } else {
        lines = s.split_lines().lines;
        points = s.sextactic();
      }
      Json eqs = Json::array();
      for (const auto& l : lines) eqs.push_back(HomPoly::linear(l.coords()).to_text());
      std::cout << Json{{"lines", eqs}, {"summary", to_json(summarize_arrangement(lines, points))}}.dump(2) << "\n";
      return 0;
    }

    if (*grp) {
      Session s = make_session(opt);
      if (!grp_table && !grp_oracle) grp_table = true;
      if (grp_table) std::cout << group_table_json(s).dump(2) << "\n";
      if (grp_oracle) std::cout << predicate_table_json(s).dump(2) << "\n";
      return 0;
    }

    if (*ver) {
      Session s = make_session(opt);
      const CensusReport r = verify(s, parse_scope(ver_scope));
      const std::string json = r.to_json().dump(2) + "\n";
      if (ver_json) {
        std::cout << json;
        std::cerr << r.summary();
      } else {
        std::cout << r.summary();
      }
      if (!ver_out.empty()) write_out(json, ver_out);
      return r.ok() ? 0 : kExitFail;
    }

    if (*emt) {
      Session s = make_session(opt);
      write_out(emit(s, emit_what, parse_format(emit_format)), emit_out);
      return 0;
    }
  } catch (const UnknownTarget& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
