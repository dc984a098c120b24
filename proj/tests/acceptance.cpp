// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line each. Exits nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "harmonia/defect.hpp"
#include "harmonia/derived.hpp"
#include "harmonia/fixtures.hpp"
#include "harmonia/geodesy.hpp"
#include "harmonia/io.hpp"
#include "harmonia/pseudometric.hpp"
#include "harmonia/roots.hpp"

using namespace harmonia;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

struct Criterion {
  int id;
  std::string what;
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += why;
    }
  }
  ~Criterion() {
    std::printf("criterion %2d: %s  %s%s%s\n", id, pass ? "PASS" : "FAIL", what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++g_failures;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void criterion_1_lagrange() {
  Criterion c{1, "Lagrange identity residual < 1e-12 relative on 1e4 points, < 1 s", true, ""};
  const auto t0 = Clock::now();
  Rng rng(42);
  double worst = 0;
  for (int surf = 0; surf < 10; ++surf) {
    auto phi = fixtures::random_phi(rng, 3, 5);
    HarmonicImmersion s(phi, DiskDomain(cx(0, 0), 1.0, 2));
    for (int i = 0; i < 1000; ++i) {
      const cx z = rng.complex_in_disk(1.0);
      std::array<cx, 3> v, d;
      for (int k = 0; k < 3; ++k) {
        v[static_cast<std::size_t>(k)] = s.phi()[static_cast<std::size_t>(k)](z);
        d[static_cast<std::size_t>(k)] = s.dphi()[static_cast<std::size_t>(k)](z);
      }
      double dn = 0, vn = 0;
      cx dot(0);
      for (int k = 0; k < 3; ++k) {
        dn += std::norm(d[static_cast<std::size_t>(k)]);
        vn += std::norm(v[static_cast<std::size_t>(k)]);
        dot += d[static_cast<std::size_t>(k)] * std::conj(v[static_cast<std::size_t>(k)]);
      }
      const double scale = dn * vn + std::norm(dot);
      worst = std::max(worst, s.lagrange_residual(z) / std::max(scale, 1e-300));
    }
  }
  const double dt = seconds_since(t0);
  c.require(worst < 1e-12, "worst relative residual " + std::to_string(worst));
  c.require(dt < 1.0, "runtime " + std::to_string(dt) + " s");
}

void criterion_2_harmonic_graph() {
  Criterion c{2, "harmonic-graph fixture: h = z^2, K = sqrt(5), curvatures, ratio 25/27", true, ""};
  auto s = fixtures::harmonic_graph(129);
  ComplexPoly h = s.hopf_polynomial();
  c.require(h.degree() == 2 && std::abs(h.coeff(2) - cx(1, 0)) == 0.0 &&
                std::abs(h.coeff(0)) == 0.0 && std::abs(h.coeff(1)) == 0.0,
            "hopf polynomial is not exactly z^2");
  c.require(std::abs(s.qc_constant() - std::sqrt(5.0)) <= 1e-9, "K != sqrt(5)");
  c.require(std::abs(s.curvature_klotz(cx(0, 0)) - (-4.0)) <= 1e-9, "K_Gamma(0) != -4");
  c.require(std::abs(s.curvature_induced(cx(0, 0)) - (-4.0)) <= 1e-9, "K_ds2(0) != -4");
  for (cx z : {cx(1, 0), cx(0, 1), cx(std::sqrt(0.5), std::sqrt(0.5))}) {
    const double ratio = std::abs(s.curvature_klotz(z)) / std::abs(s.curvature_induced(z));
    c.require(std::abs(ratio - 25.0 / 27.0) <= 1e-9, "ratio at |z|=1 is not 25/27");
    c.require(ratio >= 25.0 / 81.0 - 1e-9, "ratio fell below the bound 25/81");
  }
}

void criterion_3_enneper() {
  Criterion c{3, "Enneper fixture: h = 0 exactly, K_Gamma closed form, K = 1", true, ""};
  auto s = fixtures::enneper(129);
  c.require(s.hopf_polynomial().is_zero(), "hopf polynomial is not exactly 0");
  c.require(s.qc_constant() == 1.0, "qc constant is not 1");
  Rng rng(42);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const cx z = rng.complex_in_disk(0.999);
    const double want = -4.0 / std::pow(1.0 + std::norm(z), 4);
    worst = std::max(worst, std::abs(s.curvature_klotz(z) - want));
  }
  c.require(worst <= 1e-9, "closed-form curvature drift " + std::to_string(worst));
}

void criterion_4_ratio_and_distance() {
  Criterion c{4, "curvature domination everywhere; d <= sqrt(2) d_Gamma + grid error", true, ""};
  for (auto maker : {&fixtures::harmonic_graph, &fixtures::enneper, &fixtures::flat}) {
    auto s = maker(129);
    const double K = s.qc_constant();
    const double bound = std::pow((K * K + 1) / (2 * K), 4);
    GridFields f = s.evaluate_grid();
    for (std::size_t i = 0; i < f.points.size(); ++i) {
      if (f.degenerate[i]) continue;
      const double slack =
          bound * std::abs(f.curvature[i].k_klotz) - std::abs(f.curvature[i].k_induced);
      if (slack < -1e-9) {
        c.require(false, "domination failed at a grid point");
        break;
      }
    }
  }
  for (auto maker : {&fixtures::harmonic_graph, &fixtures::enneper}) {
    auto s = maker(65);
    auto rep = metric_comparison_check(s, 257, 100);
    c.require(rep.distance_checks >= 100, "fewer than 100 distance samples");
    c.require(rep.distance_violations == 0, "d > sqrt(2) d_Gamma + error somewhere");
  }
}

void criterion_5_sandwich() {
  Criterion c{5, "normal-angle sandwich on both fixtures; K = 1 equality on Enneper", true, ""};
  Rng rng(42);
  auto g = fixtures::harmonic_graph(65);
  const double Kg = g.qc_constant();
  for (int i = 0; i < 100; ++i) {
    auto b = rng.unit_vec3();
    auto rep = angle_sandwich_check(g, Kg, rng.complex_in_disk(0.999), Direction{{b[0], b[1], b[2]}});
    if (!rep.holds) {
      c.require(false, "sandwich failed on the harmonic graph");
      break;
    }
  }
  auto e = fixtures::enneper(65);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    auto b = rng.unit_vec3();
    auto rep = angle_sandwich_check(e, 1.0, rng.complex_in_disk(0.999), Direction{{b[0], b[1], b[2]}});
    c.require(rep.holds, "sandwich failed on Enneper");
    worst = std::max(worst, rep.max_equality_gap);
  }
  c.require(worst <= 1e-10, "K = 1 equality gap " + std::to_string(worst));
}

void criterion_6_fubini_study() {
  Criterion c{6, "derived-norm Laplacian identity for F = (1, z): FD vs analytic < 1e-4, < 1 s", true, ""};
  const auto t0 = Clock::now();
  DerivedCurve F(std::vector<ComplexPoly>{ComplexPoly::constant(cx(1, 0)), ComplexPoly::monomial(1)});
  auto rep = fs_laplacian_identity_check(F, 0, DiskDomain(cx(0, 0), 1.0, 9), 1e-3);
  c.require(rep.points > 0, "no sample points");
  c.require(rep.max_rel_error < 1e-4, "max relative error " + std::to_string(rep.max_rel_error));
  // cross-check against the closed form 1/(1+|z|^2)^2 directly
  Rng rng(42);
  for (int i = 0; i < 50; ++i) {
    const cx z = rng.complex_in_disk(0.8);
    const double analytic = 1.0 / std::pow(1.0 + std::norm(z), 2);
    const double prev = 1.0;
    const double rhs = prev * F.norm_sq(1, z) / (F.norm_sq(0, z) * F.norm_sq(0, z));
    c.require(std::abs(rhs - analytic) <= 1e-12, "norm-ratio side mismatch");
  }
  c.require(seconds_since(t0) < 1.0, "runtime exceeded 1 s");
}

void criterion_7_reparam() {
  Criterion c{7, "Wronskian reparametrization rule, 20 seeded pairs up to degree 6", true, ""};
  Rng rng(42);
  for (int t = 0; t < 20; ++t) {
    std::vector<ComplexPoly> fs;
    const int m = rng.uniform_int(2, 4);
    for (int i = 0; i < m; ++i) fs.push_back(fixtures::random_poly(rng, 6));
    cx a = rng.complex_in_box(1.0);
    if (std::abs(a) < 0.2) a += cx(1, 0);
    auto rep = wronskian_reparam_check(fs, a, rng.complex_in_box(1.0));
    if (!rep.pass) {
      c.require(false, "pair " + std::to_string(t) + " error " +
                           std::to_string(rep.max_coeff_error));
      break;
    }
  }
}

void criterion_8_nochka() {
  Criterion c{8, "Nochka weights, bullets, product and divisor inequalities, < 30 s", true, ""};
  const auto t0 = Clock::now();
  Rng rng(42);

  // k = n instances return unit weights
  for (int t = 0; t < 5; ++t) {
    const int k = rng.uniform_int(1, 3);
    const int q = std::min(12, 2 * k + 2 + rng.uniform_int(0, 2));
    auto planes = fixtures::random_planes(rng, q, k + 1);
    if (!subgeneral_position(planes, k)) continue;
    NochkaWeights w = compute_nochka_weights(planes, k);
    c.require(std::abs(w.theta - 1.0) <= 1e-9, "theta != 1 in general position");
    for (double o : w.omega) c.require(std::abs(o - 1.0) <= 1e-9, "omega != 1 in general position");
    c.require(verify_nochka_properties(w, planes).pass(), "bullets failed (k = n)");
  }

  // subgeneral instances: all four bullets verified exhaustively (q <= 12)
  std::vector<Hyperplane> sub;
  NochkaWeights wsub;
  {
    sub = fixtures::restricted_planes(rng, 8, 3, 1); // k = 1, n = 2
    wsub = compute_nochka_weights(sub, 2);
    c.require(verify_nochka_properties(wsub, sub).pass(), "bullets failed (k < n)");
  }

  // product-inequality witness in 100/100 seeded trials
  int found = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> E(8);
    for (auto& e : E) e = rng.uniform(1.0 + 1e-9, 10.0);
    std::vector<int> B;
    const int bsize = rng.uniform_int(1, 3);
    while (static_cast<int>(B.size()) < bsize) {
      int j = rng.uniform_int(0, 7);
      if (std::find(B.begin(), B.end(), j) == B.end()) B.push_back(j);
    }
    std::sort(B.begin(), B.end());
    if (product_inequality_check(wsub, sub, E, B).found) ++found;
  }
  c.require(found == 100, "witness found only " + std::to_string(found) + "/100");

  // divisor inequality: 50 seeded instances
  int done = 0;
  while (done < 50) {
    const int k = rng.uniform_int(1, 3);
    std::vector<ComplexPoly> f;
    for (int i = 0; i <= k; ++i) {
      ComplexPoly p = ComplexPoly::monomial(std::min(i + rng.uniform_int(0, 1), 5));
      p += fixtures::random_poly(rng, std::max(0, i - 1), 0.4);
      f.push_back(p);
    }
    if (nondegeneracy_rank(f) != k) continue;
    const int q = std::min(9, 2 * k + 2 + rng.uniform_int(0, 1));
    auto planes = fixtures::random_planes(rng, q, k + 1);
    if (!subgeneral_position(planes, k)) continue;
    NochkaWeights w = compute_nochka_weights(planes, k);
    auto rep = divisor_inequality_check(f, planes, w, DiskDomain(cx(0, 0), 1.0, 2));
    if (!rep.pass) {
      c.require(false, "divisor inequality failed, min lhs " + std::to_string(rep.min_lhs));
      break;
    }
    ++done;
  }

  // the (1, z, z^3) triple-zero fixture: margin 1 - omega at the origin
  {
    std::vector<ComplexPoly> F{ComplexPoly::constant(cx(1, 0)), ComplexPoly::monomial(1),
                               ComplexPoly::monomial(3)};
    std::vector<Hyperplane> planes{
        Hyperplane::from_normal({cx(0, 0), cx(0, 0), cx(1, 0)}),
        Hyperplane::from_normal({cx(1, 0), cx(0, 0), cx(0, 0)}),
        Hyperplane::from_normal({cx(0, 0), cx(1, 0), cx(0, 0)}),
        Hyperplane::from_normal({cx(1, 0), cx(1, 0), cx(1, 0)}),
        Hyperplane::from_normal({cx(1, 0), cx(2, 0), cx(3, 0)}),
    };
    NochkaWeights w = compute_nochka_weights(planes, 2);
    auto rep = divisor_inequality_check(F, planes, w, DiskDomain(cx(0, 0), 1.0, 2));
    c.require(rep.pass, "triple-zero fixture failed");
    bool origin_ok = false;
    for (const auto& row : rep.rows)
      if (std::abs(row.z0) < 1e-8 &&
          std::abs(row.lhs - (1.0 - w.omega[0])) <= 1e-9 && row.lhs >= -1e-12)
        origin_ok = true;
    c.require(origin_ok, "margin at the origin is not 1 - omega");
  }

  const double dt = seconds_since(t0);
  c.require(dt < 30.0, "runtime " + std::to_string(dt) + " s");
}

void criterion_9_defect_relation() {
  Criterion c{9, "classical defect relation for 20 seeded polynomial curves", true, ""};
  Rng rng(42);
  int done = 0;
  while (done < 20) {
    const int k = rng.uniform_int(1, 3);
    std::vector<ComplexPoly> f;
    for (int i = 0; i <= k; ++i) {
      ComplexPoly p = ComplexPoly::monomial(i + rng.uniform_int(0, 1));
      p += fixtures::random_poly(rng, std::max(0, i - 1), 0.5);
      f.push_back(p);
    }
    if (nondegeneracy_rank(f) != k) continue;
    auto planes = fixtures::random_planes(rng, rng.uniform_int(k + 2, 8), k + 1);
    auto rep = defect_relation_check(f, planes);
    if (!rep.pass) {
      c.require(false, "sum " + std::to_string(rep.sum) + " > " + std::to_string(rep.bound));
      break;
    }
    ++done;
  }
}

void criterion_10_certificates() {
  Criterion c{10, "certificate checker accepts log|z|, rejects (1/2) log|z|, omitted gives 1", true, ""};
  std::vector<ComplexPoly> F{ComplexPoly::constant(cx(1, 0)), ComplexPoly::monomial(1)};
  const DiskDomain d(cx(0, 0), 1.0, 33);
  Hyperplane H = Hyperplane::from_linear_form({cx(0, 0), cx(1, 0)});
  HarmonicCertificate good{1.0, ComplexPoly::monomial(1), ComplexPoly()};
  HarmonicCertificate half{0.5, ComplexPoly::monomial(1), ComplexPoly()};
  c.require(check_certificate(F, H, 0.0, good, d).accepted, "log|z| rejected");
  c.require(!check_certificate(F, H, 0.0, half, d).accepted, "(1/2) log|z| accepted");

  Hyperplane omitted = Hyperplane::from_linear_form({cx(-2, 0), cx(1, 0)});
  std::vector<std::pair<double, HarmonicCertificate>> certs{
      {0.0, HarmonicCertificate{0.0, ComplexPoly(), ComplexPoly()}}};
  c.require(modified_defect_bound(F, omitted, certs, d) == 1.0, "omitted plane bound != 1");
}

void criterion_11_windows() {
  Criterion c{11, "constant windows for 50 seeded tuples; HypothesisFailed on violation", true, ""};
  Rng rng(42);
  int built = 0;
  while (built < 50) {
    const int k = rng.uniform_int(1, 2);
    const int n = k + 1 + rng.uniform_int(0, 1);
    const int m = n - 1;
    const double threshold = (2.0 * n - k - 1.0) * (k / 2.0 + 1.0);
    const int q = std::max(static_cast<int>(std::floor(threshold)) + 1, 2 * m - k + 2) +
                  rng.uniform_int(0, 3);
    std::vector<double> eta(static_cast<std::size_t>(q));
    double sum = 0;
    for (auto& e : eta) {
      e = rng.uniform(0.0, 0.2);
      sum += 1 - e;
    }
    if (!(sum > threshold)) continue;
    auto planes = fixtures::restricted_planes(rng, q, n, k);
    if (!subgeneral_position(planes, m)) continue;
    DefectConfig cfg = build_defect_config(q, n, k, eta, compute_nochka_weights(planes, m));
    const double nl = cfg.N * cfg.Lambda * (1 - cfg.tau);
    if (!(cfg.tau > 0 && cfg.tau < 1 && nl > 0 && nl < 4)) {
      c.require(false, "window violated at tuple " + std::to_string(built));
      break;
    }
    ++built;
  }
  // violation raises HypothesisFailed
  auto planes = fixtures::planes_through_points(fixtures::seven_p1_points());
  NochkaWeights w = compute_nochka_weights(planes, 1);
  std::vector<double> ones(7, 1.0);
  bool raised = false;
  try {
    build_defect_config(7, 2, 1, ones, w);
  } catch (const Error& e) {
    raised = e.code() == Errc::hypothesis_failed;
  }
  c.require(raised, "eta = 1 did not raise HypothesisFailed");
}

void criterion_12_pseudometric() {
  Criterion c{12, "Poincare ratio 1, positive stable d_k, radial divergence/finiteness", true, ""};
  // Poincare equality fixture
  PseudoMetricField poincare(
      PseudoMetricField::Kind::custom, DiskDomain(cx(0, 0), 1.0, 129),
      [](cx z) { return 2.0 * std::log(2.0 / (1.0 - std::norm(z))); });
  c.require(std::abs(ahlfors_schwarz_sup(poincare) - 1.0) <= 1e-6, "Poincare ratio not 1");

  // worked xi instance
  auto pts = fixtures::seven_p1_points();
  auto planes = fixtures::planes_through_points(pts);
  NochkaWeights w = compute_nochka_weights(planes, 1);
  std::vector<double> eta(7, 0.0);
  DefectConfig cfg = build_defect_config(7, 2, 1, eta, w);
  std::vector<HarmonicCertificate> certs;
  for (cx z0 : pts) certs.push_back({1.0, ComplexPoly({-0.5 * z0, cx(0.5, 0)}), ComplexPoly()});
  DerivedCurve F(std::vector<ComplexPoly>{ComplexPoly::constant(cx(1, 0)), ComplexPoly::monomial(1)});
  XiOmegaField base = xi_field(F, planes, cfg, certs, DiskDomain(cx(0, 0), 1.0, 65));
  auto rep = pseudo_metric_curvature_check(base);
  c.require(rep.positive, "empirical d_k not positive");
  c.require(rep.as_stable, "Ahlfors-Schwarz sup not stable under refinement");
  XiOmegaField fine = xi_field(F, planes, cfg, certs, DiskDomain(cx(0, 0), 1.0, 129));
  auto rep2 = pseudo_metric_curvature_check(fine);
  c.require(rep2.positive &&
                std::abs(rep2.empirical_dk - rep.empirical_dk) <= 0.10 * rep.empirical_dk,
            "d_k unstable under refinement");

  // divergence fixture from the window exponent
  const double p = -4.0 / (cfg.N * cfg.Lambda * (1 - cfg.tau));
  PseudoMetricField sing(PseudoMetricField::Kind::custom, DiskDomain(cx(0, 0), 1.0, 17),
                         [p](cx z) { return p * std::log(std::abs(z - cx(0.5, 0))); },
                         {cx(0.5, 0)});
  auto div = radial_length(sing, 0.0);
  c.require(div.divergent, "non-integrable exponent not flagged divergent");

  // the d-sigma fixture has finite radial length
  PseudoMetricField ds = dsigma_field(F, planes, cfg, certs, DiskDomain(cx(0, 0), 1.0, 33));
  auto fin = radial_length(ds, 0.0);
  c.require(!fin.divergent && std::isfinite(fin.length), "d-sigma ray length not finite");
}

void criterion_13_geodesics() {
  Criterion c{13, "flat d(0) = 1 at res 512 within 3%; Gamma fixture 1.2713; monotone", true, ""};
  auto flat = fixtures::flat(33);
  // monotone refinement, measured where the query node exists at every level
  double prev = 1e300;
  for (int res : {129, 257, 513}) {
    MetricGraph g = discretize_metric(flat, MetricKind::induced, res);
    const double d0 = distance_to_boundary(g, cx(0, 0));
    c.require(d0 <= prev * 1.005, "distance grew under refinement");
    prev = d0;
  }
  {
    MetricGraph g = discretize_metric(flat, MetricKind::induced, 512);
    const double d0 = distance_to_boundary(g, cx(0, 0));
    c.require(std::abs(d0 - 1.0) <= 0.03, "flat d(0) = " + std::to_string(d0));
  }
  auto s = fixtures::harmonic_graph(33);
  MetricGraph g = discretize_metric(s, MetricKind::klotz, 512);
  const double want = std::sqrt(3.0) / 2.0 + std::asinh(std::sqrt(2.0)) / (2.0 * std::sqrt(2.0));
  const double d0 = distance_to_boundary(g, cx(0, 0));
  c.require(std::abs(d0 - want) <= 0.03 * want,
            "Gamma d(0) = " + std::to_string(d0) + " vs " + std::to_string(want));
}

void criterion_14_scan() {
  Criterion c{14, "curvature-estimate scan: finite, refinement-stable; flat scans to zero", true, ""};
  auto dirs = fixtures::seven_directions();
  auto flat = fixtures::flat(33);
  c.require(curvature_estimate_scan(flat, dirs, 129).sup_kd2 == 0.0, "flat sup != 0");

  auto s = fixtures::harmonic_graph(33);
  auto a = curvature_estimate_scan(s, dirs, 129);
  auto b = curvature_estimate_scan(s, dirs, 257);
  c.require(a.sup_kd2 > 0 && std::isfinite(a.sup_kd2), "sup not finite/positive");
  c.require(std::abs(b.sup_kd2 - a.sup_kd2) <= 0.10 * a.sup_kd2,
            "sup moved more than 10% under refinement");
}

} // namespace

int main() {
  const auto t0 = Clock::now();
  criterion_1_lagrange();
  criterion_2_harmonic_graph();
  criterion_3_enneper();
  criterion_4_ratio_and_distance();
  criterion_5_sandwich();
  criterion_6_fubini_study();
  criterion_7_reparam();
  criterion_8_nochka();
  criterion_9_defect_relation();
  criterion_10_certificates();
  criterion_11_windows();
  criterion_12_pseudometric();
  criterion_13_geodesics();
  criterion_14_scan();
  std::printf("%d/14 criteria passed in %.1f s\n", 14 - g_failures, seconds_since(t0));
  return g_failures == 0 ? 0 : 1;
}
