// harmonia: curvature, Gauss-map value distribution and defect analysis of
// polynomial harmonic surface data.
//
// Exit codes: 0 success, 1 property failure, 2 input error, 3 degenerate
// geometry. HARMONIA_THREADS caps worker parallelism.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "harmonia/defect.hpp"
#include "harmonia/derived.hpp"
#include "harmonia/fixtures.hpp"
#include "harmonia/geodesy.hpp"
#include "harmonia/io.hpp"
#include "harmonia/kernels.hpp"
#include "harmonia/pseudometric.hpp"
#include "harmonia/verify.hpp"

namespace fs = std::filesystem;
using namespace harmonia;
using json = io::json;

namespace {

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::degenerate_point:
    case Errc::not_quasiconformal:
    case Errc::degenerate_curve:
    case Errc::indeterminate_point:
    case Errc::infeasible:
      return 3;
    case Errc::parse_error:
    case Errc::config_invalid:
    case Errc::precondition_failed:
    case Errc::too_few:
    case Errc::too_few_planes:
    case Errc::not_subgeneral_position:
    case Errc::dimension_mismatch:
    case Errc::zero_polynomial:
    case Errc::both_zero:
    case Errc::all_zero:
    case Errc::stage_out_of_range:
    case Errc::hypothesis_failed:
      return 2;
    default:
      return 1;
  }
}

struct CommonOpts {
  std::string config, planes, directions, certificates, out = ".";
  int grid = 0;
  std::uint64_t seed = 42;
  std::string only;
  std::string format = "csv";
  bool corrupt_nochka = false;
};

fs::path outfile(const CommonOpts& o, const std::string& name) {
  fs::create_directories(o.out);
  return fs::path(o.out) / name;
}

void write_summary(const CommonOpts& o, const json& summary) {
  io::write_text(outfile(o, summary["command"].get<std::string>() + "_summary.json"),
                 summary.dump(2) + "\n");
}

HarmonicImmersion load_surface_opt(const CommonOpts& o) {
  if (o.config.empty()) raise(Errc::parse_error, "--config is required for this command");
  HarmonicImmersion s = io::load_surface(o.config);
  if (o.grid > 0)
    return HarmonicImmersion(s.phi(), s.domain().with_resolution(o.grid));
  return s;
}

int cmd_analyze(const CommonOpts& o) {
  HarmonicImmersion s = load_surface_opt(o);
  GridFields f = s.evaluate_grid();
  const double K = s.qc_constant();
  io::write_text(outfile(o, "analyze_grid.csv"), io::grid_report_csv(f));

  double h_max = 0, kg_min = 0, ki_min = 0;
  ComplexPoly hopf = s.hopf_polynomial();
  for (std::size_t i = 0; i < f.points.size(); ++i) {
    if (f.degenerate[i]) continue;
    h_max = std::max(h_max, std::abs(f.metric[i].h));
    kg_min = std::min(kg_min, f.curvature[i].k_klotz);
    if (s.dimension() == 3) ki_min = std::min(ki_min, f.curvature[i].k_induced);
  }
  if (hopf.is_zero()) h_max = 0.0; // conformal data is exact

  json summary = io::make_summary("analyze", o.seed);
  summary["dimension"] = s.dimension();
  summary["qc_constant"] = K;
  summary["h_max_abs"] = h_max;
  summary["hopf_identically_zero"] = hopf.is_zero();
  summary["k_klotz_min"] = kg_min;
  summary["k_induced_min"] = ki_min;
  summary["grid_points"] = f.points.size();
  summary["degenerate_points"] = f.degenerate_count;
  summary["outputs"] = json{{"grid_csv", "analyze_grid.csv"}};
  write_summary(o, summary);
  std::cout << "K = " << io::format_double(K) << ", h_max = " << io::format_double(h_max)
            << ", grid points = " << f.points.size() << "\n";
  return 0;
}

int cmd_verify(const CommonOpts& o) {
  verify::SuiteOptions vo;
  vo.seed = o.seed;
  vo.corrupt_nochka = o.corrupt_nochka;
  auto results = verify::run_suites(vo, o.only);
  if (results.empty()) raise(Errc::parse_error, "--only matched no suite");
  bool all = true;
  json summary = io::make_summary("verify", o.seed);
  json suites = json::array();
  for (const auto& r : results) {
    std::cout << (r.pass() ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks)\n";
    for (const auto& m : r.messages) std::cout << "    " << m << "\n";
    suites.push_back({{"name", r.name}, {"checks", r.checks}, {"failures", r.failures}});
    all = all && r.pass();
  }
  summary["suites"] = suites;
  summary["pass"] = all;
  write_summary(o, summary);
  return all ? 0 : 1;
}

int cmd_nochka(const CommonOpts& o) {
  if (o.planes.empty()) raise(Errc::parse_error, "--planes is required");
  io::PlaneFile pf = io::load_planes(o.planes);
  const int k = pf.planes[0].ambient() - 1;
  const int n = pf.subgeneral_n >= 0 ? pf.subgeneral_n : k;
  NochkaWeights w = compute_nochka_weights(pf.planes, n);
  NochkaCheck c = verify_nochka_properties(w, pf.planes);
  io::write_text(outfile(o, "nochka_report.csv"), io::nochka_report_csv(w, c));
  json summary = io::make_summary("nochka", o.seed);
  summary["weights"] = io::weights_to_json(w);
  summary["pass"] = c.pass();
  summary["outputs"] = json{{"report_csv", "nochka_report.csv"}};
  write_summary(o, summary);
  std::cout << "theta = " << io::format_double(w.theta) << ", omega = [";
  for (std::size_t j = 0; j < w.omega.size(); ++j)
    std::cout << (j ? ", " : "") << io::format_double(w.omega[j]);
  std::cout << "]\n";
  return c.pass() ? 0 : 1;
}

int cmd_defect(const CommonOpts& o) {
  HarmonicImmersion s = load_surface_opt(o);
  if (o.planes.empty()) raise(Errc::parse_error, "--planes is required");
  io::PlaneFile pf = io::load_planes(o.planes);

  CurveReduction red = reduce_to_nondegenerate(s.phi());
  std::vector<Hyperplane> planes;
  for (const auto& H : pf.planes)
    planes.push_back(H.ambient() == red.k() + 1 ? H : restrict_hyperplane(H, red));

  DefectRelationReport rel = defect_relation_check(red.curve, planes);
  std::vector<std::pair<int, double>> rows;
  std::vector<std::string> methods;
  for (std::size_t j = 0; j < planes.size(); ++j) {
    rows.push_back({static_cast<int>(j) + 1, rel.defects[j]});
    methods.push_back("classical");
  }

  json cert_results = json::array();
  if (!o.certificates.empty()) {
    auto entries = io::load_certificates(o.certificates);
    for (const auto& e : entries) {
      if (e.plane < 0 || e.plane >= static_cast<int>(planes.size()))
        raise(Errc::parse_error, "certificate refers to a missing plane");
      std::pair<double, HarmonicCertificate> c{e.eta, e.cert};
      const double bound = modified_defect_bound(red.curve, planes[static_cast<std::size_t>(e.plane)],
                                                 std::span(&c, 1), s.domain());
      rows.push_back({e.plane + 1, bound});
      methods.push_back("modified-certified");
      cert_results.push_back({{"plane", e.plane + 1}, {"delta_h_lower_bound", bound}});
    }
  }
  io::write_text(outfile(o, "defect_report.csv"), io::defect_report_csv(rows, methods));

  json summary = io::make_summary("defect", o.seed);
  summary["k"] = red.k();
  summary["classical_sum"] = rel.sum;
  summary["classical_bound"] = rel.bound;
  summary["relation_pass"] = rel.pass;
  summary["certified"] = cert_results;
  summary["outputs"] = json{{"report_csv", "defect_report.csv"}};
  write_summary(o, summary);
  std::cout << "sum of classical defects = " << io::format_double(rel.sum)
            << " <= " << io::format_double(rel.bound) << "\n";
  for (const auto& c : cert_results)
    std::cout << "plane " << c["plane"] << ": delta^H >= "
              << io::format_double(c["delta_h_lower_bound"].get<double>()) << "\n";
  return rel.pass ? 0 : 1;
}

int cmd_geodesic(const CommonOpts& o) {
  HarmonicImmersion s = load_surface_opt(o);
  for (MetricKind kind : {MetricKind::induced, MetricKind::klotz}) {
    MetricGraph g = discretize_metric(s, kind);
    auto dist = boundary_distance_field(g);
    const std::string stem = kind == MetricKind::induced ? "geodesic_ds2" : "geodesic_gamma";
    io::write_text(outfile(o, stem + ".csv"), io::distance_field_csv(g, dist));
    if (o.format == "svg")
      io::write_text(outfile(o, stem + ".svg"), io::distance_field_svg(g, dist));
  }
  MetricGraph g = discretize_metric(s, MetricKind::induced);
  auto dist = boundary_distance_field(g);
  json summary = io::make_summary("geodesic", o.seed);
  summary["resolution"] = g.domain.grid_resolution;
  summary["d_center"] = distance_to_boundary(g, dist, s.domain().center);
  summary["outputs"] = json{{"ds2_csv", "geodesic_ds2.csv"}, {"gamma_csv", "geodesic_gamma.csv"}};
  write_summary(o, summary);
  std::cout << "d(center) = " << io::format_double(summary["d_center"].get<double>()) << "\n";
  return 0;
}

int cmd_curvature_scan(const CommonOpts& o) {
  HarmonicImmersion s = load_surface_opt(o);
  if (o.directions.empty()) raise(Errc::parse_error, "--directions is required");
  auto dirs = io::load_directions(o.directions);
  CurvatureScanReport rep = curvature_estimate_scan(s, dirs);
  json summary = io::make_summary("curvature-scan", o.seed);
  summary["qc_constant"] = rep.qc;
  summary["sup_kds2_d2"] = rep.sup_kd2;
  summary["sup_kgamma_dgamma2"] = rep.sup_kgamma_dgamma2;
  summary["argmax"] = {rep.argmax.real(), rep.argmax.imag()};
  summary["points"] = rep.points;
  write_summary(o, summary);
  std::cout << "sup |K_ds2| d^2 = " << io::format_double(rep.sup_kd2) << " at ("
            << io::format_double(rep.argmax.real()) << ", " << io::format_double(rep.argmax.imag())
            << ")\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"harmonic-surface curvature and Gauss-map value distribution toolkit"};
  app.require_subcommand(1);

  CommonOpts o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "surface config JSON");
    sub->add_option("--planes", o.planes, "hyperplane set JSON");
    sub->add_option("--directions", o.directions, "direction list JSON");
    sub->add_option("--certificates", o.certificates, "defect certificate JSON");
    sub->add_option("--grid", o.grid, "grid resolution override");
    sub->add_option("--seed", o.seed, "seed for randomized suites");
    sub->add_option("--out", o.out, "output directory");
    sub->add_option("--only", o.only, "run only matching verify suites");
    sub->add_option("--format", o.format, "csv|json|svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
  };

  auto* analyze = app.add_subcommand("analyze", "metric/curvature grid report and K");
  auto* verify_cmd = app.add_subcommand("verify", "run the module property suites");
  verify_cmd->add_flag("--corrupt-nochka", o.corrupt_nochka,
                       "self-test: corrupt weights to prove the checker trips");
  auto* nochka = app.add_subcommand("nochka", "Nochka weights for a hyperplane family");
  auto* defect = app.add_subcommand("defect", "classical and certified modified defects");
  auto* geodesic = app.add_subcommand("geodesic", "boundary distance fields");
  auto* scan = app.add_subcommand("curvature-scan", "empirical curvature-estimate constant");
  for (auto* sub : {analyze, verify_cmd, nochka, defect, geodesic, scan}) add_common(sub);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(o);
    if (verify_cmd->parsed()) return cmd_verify(o);
    if (nochka->parsed()) return cmd_nochka(o);
    if (defect->parsed()) return cmd_defect(o);
    if (geodesic->parsed()) return cmd_geodesic(o);
    if (scan->parsed()) return cmd_curvature_scan(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
