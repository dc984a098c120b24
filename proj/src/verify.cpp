#include "harmonia/verify.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "harmonia/defect.hpp"
#include "harmonia/derived.hpp"
#include "harmonia/fixtures.hpp"
#include "harmonia/geodesy.hpp"
#include "harmonia/nochka.hpp"
#include "harmonia/pseudometric.hpp"
#include "harmonia/roots.hpp"

namespace harmonia::verify {

namespace {

struct Check {
  SuiteResult& r;
  void operator()(bool ok, const std::string& what) {
    ++r.checks;
    if (!ok) {
      ++r.failures;
      r.messages.push_back(what);
    }
  }
};

SuiteResult suite_holomorphic_core(const SuiteOptions& opts) {
  SuiteResult r;
  r.name = "holomorphic-core";
  Check check{r};
  Rng rng(opts.seed);

  // eval(p*q) = eval(p) eval(q)
  double worst = 0;
  for (int trial = 0; trial < 20; ++trial) {
    ComplexPoly p = fixtures::random_poly(rng, 8), q = fixtures::random_poly(rng, 8);
    ComplexPoly pq = p * q;
    for (int i = 0; i < 50; ++i) {
      cx z = rng.complex_in_box(1.5);
      const cx lhs = pq(z), rhs = p(z) * q(z);
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
  }
  check(worst < 1e-10, "poly product evaluation drifted: " + std::to_string(worst));

  // gcd divides both inputs
  for (int trial = 0; trial < 10; ++trial) {
    ComplexPoly g = fixtures::random_poly(rng, 3);
    ComplexPoly a = g * fixtures::random_poly(rng, 4);
    ComplexPoly b = g * fixtures::random_poly(rng, 4);
    ComplexPoly d = poly_gcd(a, b);
    const double scale = std::max(a.coeff_norm_inf(), b.coeff_norm_inf());
    const double ra = poly_divmod(a, d).remainder.coeff_norm_inf();
    const double rb = poly_divmod(b, d).remainder.coeff_norm_inf();
    check(ra < 1e-9 * scale && rb < 1e-9 * scale, "gcd does not divide its inputs");
  }

  // root recovery with exact multiplicities
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<cx> roots;
    std::vector<int> mult;
    int total = 0;
    while (total < 10) {
      cx z = rng.complex_in_disk(0.9);
      bool tooclose = false;
      for (cx u : roots)
        if (std::abs(u - z) < 1e-3) tooclose = true;
      if (tooclose) continue;
      int m = rng.uniform_int(1, std::min(3, 10 - total));
      roots.push_back(z);
      mult.push_back(m);
      total += m;
    }
    std::vector<cx> expanded;
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (int j = 0; j < mult[i]; ++j) expanded.push_back(roots[i]);
    ComplexPoly p = ComplexPoly::from_roots(expanded, cx(1.0, 0.3));
    auto found = roots_in_domain(p, DiskDomain(cx(0, 0), 1.0, 2));
    bool ok = found.size() == roots.size();
    if (ok)
      for (std::size_t i = 0; i < roots.size(); ++i) {
        bool matched = false;
        for (const auto& f : found)
          if (std::abs(f.root - roots[i]) < 1e-8 && f.multiplicity == mult[i]) matched = true;
        if (!matched) ok = false;
      }
    check(ok, "root recovery failed at trial " + std::to_string(trial));
  }
  return r;
}

SuiteResult suite_harmonic_surface(const SuiteOptions& opts) {
  SuiteResult r;
  r.name = "harmonic-surface";
  Check check{r};
  Rng rng(opts.seed + 1);

  for (int trial = 0; trial < 6; ++trial) {
    auto phi = fixtures::random_phi(rng, 3, 5);
    HarmonicImmersion s(phi, DiskDomain(rng.complex_in_box(0.2), 1.0, 33));
    GridFields f = s.evaluate_grid();
    double worst_identity = 0;
    bool hopf_bounded = true;
    std::size_t eq89_mismatch = 0;
    const double K = s.qc_constant(512);
    for (std::size_t i = 0; i < f.points.size(); ++i) {
      if (f.degenerate[i]) continue;
      const MetricSample& m = f.metric[i];
      if (std::abs(m.h) >= m.phi_norm_sq) hopf_bounded = false;
      const double scale = std::max(1.0, m.phi_norm_sq);
      worst_identity = std::max(
          worst_identity, std::abs(m.e + m.g - 4.0 * m.phi_norm_sq) / scale);
      const double disc = m.phi_norm_sq * m.phi_norm_sq - std::norm(m.h);
      worst_identity = std::max(
          worst_identity, std::abs(m.e * m.g - m.f * m.f - 4.0 * disc) / (scale * scale));
      // gradient form of quasiconformality agrees with the |phi| form
      const bool eq8 = m.grad_norm_sq <= (K + 1.0 / K) * m.jacobian + 1e-9 * scale;
      const bool eq9 =
          m.phi_norm_sq <= (K * K + 1.0) / (2.0 * K) * std::sqrt(disc) + 1e-9 * scale;
      if (eq8 != eq9) ++eq89_mismatch;
      // metric sandwich and the 4|phi|^2 eigenvalue bound
      const double gamma = 2.0 * m.phi_norm_sq;
      const double mean = 0.5 * (m.e + m.g), dev = std::hypot(0.5 * (m.e - m.g), m.f);
      if (mean + dev > 4.0 * m.phi_norm_sq + 1e-9 * scale) hopf_bounded = false;
      const double lo = 2.0 / (K * K + 1.0), hi = 2.0 * K * K / (K * K + 1.0);
      for (int a = 0; a < 16; ++a) {
        const double ang = M_PI * a / 16.0;
        const double c = std::cos(ang), sn = std::sin(ang);
        const double q = m.e * c * c + 2.0 * m.f * c * sn + m.g * sn * sn;
        if (q < lo * gamma - 1e-9 * gamma || q > hi * gamma + 1e-9 * gamma) ++eq89_mismatch;
      }
    }
    check(worst_identity < 1e-10, "metric identities drifted: " + std::to_string(worst_identity));
    check(hopf_bounded, "|h| < |phi|^2 or the eigenvalue bound failed");
    check(eq89_mismatch == 0, "gradient/dilatation forms disagreed at some point");
  }

  // K_Gamma equals the conformal-metric curvature by finite differences
  {
    auto s = fixtures::harmonic_graph(17);
    double worst = 0;
    const double h = 1e-3;
    for (int t = 0; t < 20; ++t) {
      cx z = rng.complex_in_disk(0.7);
      auto logrho = [&](cx w) {
        return std::log(std::sqrt(2.0 * s.metric_sample(w).phi_norm_sq));
      };
      const double lap = (logrho(z + h) + logrho(z - h) + logrho(z + cx(0, h)) +
                          logrho(z - cx(0, h)) - 4.0 * logrho(z)) /
                         (h * h);
      const double rho2 = 2.0 * s.metric_sample(z).phi_norm_sq;
      const double kfd = -lap / rho2;
      worst = std::max(worst, std::abs(kfd - s.curvature_klotz(z)) /
                                  std::max(1.0, std::abs(s.curvature_klotz(z))));
    }
    check(worst < 1e-4, "finite-difference Klotz curvature drifted: " + std::to_string(worst));
  }
  return r;
}

SuiteResult suite_gauss_map(const SuiteOptions& opts) {
  SuiteResult r;
  r.name = "gauss-map";
  Check check{r};
  Rng rng(opts.seed + 2);

  // K = 1 equality case of the angle sandwich on Enneper
  {
    auto s = fixtures::enneper(17);
    double worst = 0;
    for (int t = 0; t < 100; ++t) {
      cx z = rng.complex_in_disk(0.95);
      auto b = rng.unit_vec3();
      auto rep = angle_sandwich_check(s, 1.0, z, Direction{{b[0], b[1], b[2]}});
      worst = std::max(worst, rep.max_equality_gap);
    }
    check(worst < 1e-10, "K=1 sandwich equality gap: " + std::to_string(worst));
  }

  // omitted iff the distance stays positive on a refined grid
  {
    auto s = fixtures::harmonic_graph(17);
    auto reduced = reduced_representation(s.phi());
    const DiskDomain d(cx(0, 0), 1.0, 65);
    // met hyperplane: direction e3 gives pairing z
    Hyperplane met = direction_to_hyperplane(Direction::of(0, 0, 1));
    Hyperplane omitted = Hyperplane::from_linear_form({cx(1, 0), cx(0, 1), cx(0, 0)});
    check(!omits_hyperplane(reduced, met, d), "pairing z should be met at 0");
    check(omits_hyperplane(reduced, omitted, d), "constant pairing should be omitted");
    double min_met = 1e9, min_omitted = 1e9;
    for (const auto& gp : d.grid()) {
      min_met = std::min(min_met, hyperplane_distance(reduced, met, gp.z));
      min_omitted = std::min(min_omitted, hyperplane_distance(reduced, omitted, gp.z));
    }
    check(min_met < 0.05 && min_omitted > 0.05,
          "distance view disagrees with the root view of omittedness");
  }

  // reduced representations have constant gcd, and FS distance is scale
  // invariant after reduction
  for (int t = 0; t < 10; ++t) {
    ComplexPoly common = fixtures::random_poly(rng, 2);
    std::vector<ComplexPoly> raw;
    for (int i = 0; i < 3; ++i) raw.push_back(common * fixtures::random_poly(rng, 3));
    auto red = reduced_representation(raw);
    ComplexPoly g = red[0];
    for (std::size_t i = 1; i < red.size(); ++i) g = poly_gcd(g, red[i]);
    check(g.degree() == 0, "reduced representation kept a common factor");

    Hyperplane H = fixtures::random_plane(rng, 3);
    std::vector<ComplexPoly> scaled;
    for (const auto& p : red) scaled.push_back(cx(2, 1) * p);
    cx z = rng.complex_in_disk(0.9);
    const double d1 = hyperplane_distance(red, H, z);
    const double d2 = hyperplane_distance(scaled, H, z);
    check(std::abs(d1 - d2) < 1e-10, "FS distance changed under constant scaling");
  }

  // coplanarity checker against the brute-force determinant oracle
  {
    auto dirs = fixtures::seven_directions();
    auto bad = three_in_plane_check(dirs);
    check(bad.empty(), "fixture directions unexpectedly coplanar");
    std::vector<Direction> withbad = dirs;
    withbad.push_back(Direction::of(dirs[0].d[0] + dirs[1].d[0], dirs[0].d[1] + dirs[1].d[1],
                                    dirs[0].d[2] + dirs[1].d[2]));
    check(!three_in_plane_check(withbad).empty(), "planted coplanar triple not found");
  }
  return r;
}

SuiteResult suite_derived_curves(const SuiteOptions& opts) {
  SuiteResult r;
  r.name = "derived-curves";
  Check check{r};
  Rng rng(opts.seed + 3);

  // unitary invariance of the derived norms
  {
    std::vector<ComplexPoly> f{ComplexPoly({cx(1, 0)}), ComplexPoly({cx(0, 0), cx(1, 0)}),
                               ComplexPoly({cx(0, 0), cx(0, 0), cx(1, 0)})};
    DerivedCurve F(f);
    // a seeded unitary from a QR factorization
    Eigen::MatrixXcd A(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        cx v = rng.complex_in_box(1.0);
        A(i, j) = v;
      }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(A);
    Eigen::MatrixXcd Q = qr.householderQ();
    std::vector<ComplexPoly> g(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g[static_cast<std::size_t>(i)] += Q(i, j) * f[static_cast<std::size_t>(j)];
    DerivedCurve G(g);
    double worst = 0;
    for (int t = 0; t < 30; ++t) {
      cx z = rng.complex_in_disk(1.0);
      for (int s = 0; s <= 2; ++s) {
        const double a = F.norm_sq(s, z), b = G.norm_sq(s, z);
        worst = std::max(worst, std::abs(a - b) / std::max(1.0, a));
      }
    }
    check(worst < 1e-9, "derived norms moved under a unitary: " + std::to_string(worst));
  }

  for (int t = 0; t < 8; ++t) {
    // nondegenerate curve with independent monomial parts
    std::vector<ComplexPoly> f;
    const int k = rng.uniform_int(1, 3);
    for (int i = 0; i <= k; ++i) {
      ComplexPoly p = ComplexPoly::monomial(i);
      p += fixtures::random_poly(rng, std::max(0, i - 1), 0.3);
      f.push_back(p);
    }
    if (nondegeneracy_rank(f) != k) continue;
    DerivedCurve F(f);
    check(!F.top_wronskian().trimmed(1e-10).is_zero(), "top Wronskian vanished for a nondegenerate curve");

    // s = k contraction is H-independent
    double lo = 1e300, hi = 0;
    cx z = rng.complex_in_disk(0.8);
    for (int j = 0; j < 20; ++j) {
      Hyperplane H = fixtures::random_plane(rng, k + 1);
      const double v = F.contracted_norm_sq(k, H, z);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    check(hi - lo <= 1e-12 * std::max(1.0, hi), "s = k contraction depended on H");

    // phi_s within [0, 1], Cauchy-Schwarz
    for (int j = 0; j < 5; ++j) {
      Hyperplane H = fixtures::random_plane(rng, k + 1);
      for (int s = 0; s <= k; ++s) {
        const double v = F.phi_s(s, H, rng.complex_in_disk(0.8));
        check(v >= -1e-12 && v <= 1.0 + 1e-10, "phi_s escaped [0, 1]: " + std::to_string(v));
      }
    }
  }
  return r;
}

SuiteResult suite_nochka(const SuiteOptions& opts) {
  SuiteResult r;
  r.name = "nochka";
  Check check{r};
  Rng rng(opts.seed + 4);

  // k = n general position forces unit weights
  for (int t = 0; t < 5; ++t) {
    const int k = rng.uniform_int(1, 3);
    const int q = 2 * k + 2 + rng.uniform_int(0, 2);
    auto planes = fixtures::random_planes(rng, q, k + 1);
    if (!subgeneral_position(planes, k)) continue;
    NochkaWeights w = compute_nochka_weights(planes, k);
    if (opts.corrupt_nochka) w.theta += 0.25; // self-test hook
    bool units = std::abs(w.theta - 1.0) < 1e-9;
    for (double o : w.omega) units = units && std::abs(o - 1.0) < 1e-9;
    check(units, "general-position weights are not all 1");
    check(verify_nochka_properties(w, planes).pass() != opts.corrupt_nochka,
          opts.corrupt_nochka ? "checker missed corrupted weights"
                              : "computed weights failed their own checker");
  }

  // subgeneral k < n instances: weights verified, product inequality holds
  for (int t = 0; t < 3; ++t) {
    const int k = rng.uniform_int(1, 2);
    const int n = k + 1;
    const int q = 2 * n - k + 2 + rng.uniform_int(0, 2);
    auto planes = fixtures::restricted_planes(rng, q, n + 1, k);
    if (!subgeneral_position(planes, n)) continue;
    NochkaWeights w = compute_nochka_weights(planes, n);
    check(verify_nochka_properties(w, planes).pass(), "subgeneral weights failed the checker");

    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> E(static_cast<std::size_t>(q));
      for (auto& e : E) e = rng.uniform(1.0 + 1e-6, 10.0);
      const int bsize = rng.uniform_int(1, n + 1);
      std::vector<int> B;
      while (static_cast<int>(B.size()) < bsize) {
        int j = rng.uniform_int(0, q - 1);
        if (std::find(B.begin(), B.end(), j) == B.end()) B.push_back(j);
      }
      std::sort(B.begin(), B.end());
      auto witness = product_inequality_check(w, planes, E, B);
      check(witness.found, "product inequality witness missing");
      if (r.failures > 0) break;
    }
  }

  // divisor inequality across seeded polynomial curves
  int done = 0;
  while (done < 25) {
    const int k = rng.uniform_int(1, 3);
    std::vector<ComplexPoly> f;
    for (int i = 0; i <= k; ++i) {
      ComplexPoly p = ComplexPoly::monomial(i);
      p += fixtures::random_poly(rng, std::max(0, i - 1), 0.4);
      f.push_back(p);
    }
    if (nondegeneracy_rank(f) != k) continue;
    const int q = 2 * k + 2;
    auto planes = fixtures::random_planes(rng, q, k + 1);
    if (!subgeneral_position(planes, k)) continue;
    NochkaWeights w = compute_nochka_weights(planes, k);
    auto rep = divisor_inequality_check(f, planes, w, DiskDomain(cx(0, 0), 1.0, 2));
    check(rep.pass, "divisor inequality failed, min lhs " + std::to_string(rep.min_lhs));
    ++done;
  }
  return r;
}

SuiteResult suite_defect_metrics(const SuiteOptions& opts) {
  SuiteResult r;
  r.name = "defect-metrics";
  Check check{r};
  Rng rng(opts.seed + 5);

  // constant windows across seeded tuples; includes the chain inequalities
  int built = 0;
  while (built < 50) {
    const int k = rng.uniform_int(1, 2);
    const int n = k + 1 + rng.uniform_int(0, 1); // ambient
    const int m = n - 1;                          // subgeneral parameter
    const double threshold = (2.0 * n - k - 1.0) * (k / 2.0 + 1.0);
    const int qmin = std::max(static_cast<int>(std::floor(threshold)) + 1, 2 * m - k + 2);
    const int q = qmin + rng.uniform_int(0, 3);
    std::vector<double> eta(static_cast<std::size_t>(q));
    double sum1me = 0;
    for (auto& e : eta) {
      e = rng.uniform(0.0, 0.25);
      sum1me += 1.0 - e;
    }
    if (!(sum1me > threshold)) continue;
    auto planes = fixtures::restricted_planes(rng, q, n, k);
    if (!subgeneral_position(planes, m)) continue;
    NochkaWeights w = compute_nochka_weights(planes, m);
    DefectConfig cfg = build_defect_config(q, n, k, eta, w);
    ++built;

    check(cfg.tau > 0 && cfg.tau < 1, "tau escaped (0,1)");
    const double nl = cfg.N * cfg.Lambda * (1 - cfg.tau);
    check(nl > 0 && nl < 4, "N Lambda (1-tau) escaped (0,4)");
    // definition identities
    double sw = 0, sum_s2 = 0;
    for (int j = 0; j < q; ++j) sw += w.omega[static_cast<std::size_t>(j)] * (1 - eta[static_cast<std::size_t>(j)]);
    for (int s = 0; s <= k; ++s) sum_s2 += s * s;
    const double x = 2.0 * q / cfg.N;
    check(std::abs(cfg.Lambda - (sw - (k + 1) - x * (k * k + 2 * k + 1))) < 1e-9, "Lambda identity");
    check(std::abs(cfg.tau - (0.5 * k * (k + 1) + x * sum_s2) / cfg.Lambda) < 1e-9, "tau identity");
    double kd = 0;
    for (int s = 0; s < k; ++s) kd += (k - s) + x * (k - s) * (k - s);
    check(std::abs(cfg.kappa - 1.0 / kd) < 1e-9, "kappa identity");
    // chain inequality (ambient form)
    const double lhs = sw - (k / 2.0 + 1) * (k + 1);
    const double rhs = (k + 1.0) / (2.0 * n - k - 1.0) * (sum1me - threshold);
    check(lhs >= rhs - 1e-9, "weighted chain inequality failed");
    // subgeneral-form analogue
    double setasum = 0;
    for (double e : eta) setasum += e;
    const double lhs2 = sw - (k + 1);
    const double rhs2 = (q - 2.0 * m + k - 1 - setasum) * (k + 1.0) / (2.0 * m - k + 1.0);
    check(lhs2 >= rhs2 - 1e-9, "weighted-sum lower bound failed");
  }

  // HypothesisFailed when eta = 1 everywhere
  {
    Rng rng2(opts.seed + 6);
    auto planes = fixtures::restricted_planes(rng2, 7, 2, 1);
    NochkaWeights w = compute_nochka_weights(planes, 1);
    std::vector<double> eta(7, 1.0);
    bool raised = false;
    try {
      build_defect_config(7, 2, 1, eta, w);
    } catch (const Error& e) {
      raised = e.code() == Errc::hypothesis_failed;
    }
    check(raised, "degenerate eta did not raise HypothesisFailed");
  }

  // xi homogeneity: F -> uF with mu_j -> mu_j + eta_j log|u| leaves xi fixed
  {
    auto pts = fixtures::seven_p1_points();
    auto planes = fixtures::planes_through_points(pts);
    NochkaWeights w = compute_nochka_weights(planes, 1);
    std::vector<double> eta(7, 0.1);
    DefectConfig cfg = build_defect_config(7, 2, 1, eta, w);
    std::vector<HarmonicCertificate> certs;
    for (cx z0 : pts)
      certs.push_back({1.0, ComplexPoly({-0.5 * z0, cx(0.5, 0)}), ComplexPoly()});
    std::vector<ComplexPoly> f{ComplexPoly({cx(1, 0)}), ComplexPoly({cx(0, 0), cx(1, 0)})};
    DerivedCurve F(f);
    const DiskDomain d(cx(0, 0), 1.0, 17);
    XiOmegaField x1 = xi_field(F, planes, cfg, certs, d);

    const cx u(2, 1);
    std::vector<ComplexPoly> uf{u * f[0], u * f[1]};
    DerivedCurve Fu(uf);
    std::vector<HarmonicCertificate> certs2 = certs;
    const double lu = std::log(std::abs(u));
    for (std::size_t j = 0; j < certs2.size(); ++j)
      certs2[j].hre += ComplexPoly::constant(cx(eta[j] * lu, 0));
    XiOmegaField x2 = xi_field(Fu, planes, cfg, certs2, d);
    double worst = 0;
    for (int t = 0; t < 25; ++t) {
      cx z = rng.complex_in_disk(0.9);
      const double a = x1.xi.log_value(z), b = x2.xi.log_value(z);
      if (std::isfinite(a) && std::isfinite(b))
        worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(a)));
    }
    check(worst < 1e-9, "xi moved under rescaling: " + std::to_string(worst));
  }

  // eta-monotonicity of condition (*) when ||F|| >= 1 on the grid
  {
    std::vector<ComplexPoly> f{ComplexPoly({cx(1, 0)}), ComplexPoly({cx(0, 0), cx(1, 0)})};
    const DiskDomain d(cx(0, 0), 1.0, 33);
    Hyperplane H = Hyperplane::from_linear_form({cx(0, 0), cx(1, 0)});
    HarmonicCertificate mu{1.0, ComplexPoly({cx(0, 0), cx(1, 0)}), ComplexPoly()};
    bool base = check_certificate(f, H, 0.0, mu, d).accepted;
    bool higher = check_certificate(f, H, 0.5, mu, d).accepted;
    check(base && higher, "eta-monotonicity failed for ||F|| >= 1");
  }
  return r;
}

SuiteResult suite_geodesy(const SuiteOptions& opts) {
  SuiteResult r;
  r.name = "geodesy";
  Check check{r};
  (void)opts;

  // flat-disk distances and monotone refinement
  {
    auto s = fixtures::flat(65);
    double prev = 1e300;
    for (int res : {129, 257, 513}) {
      MetricGraph g = discretize_metric(s, MetricKind::induced, res);
      const double d0 = distance_to_boundary(g, cx(0, 0));
      if (res == 513) check(std::abs(d0 - 1.0) <= 0.03, "flat d(0) off: " + std::to_string(d0));
      check(d0 <= prev * 1.005, "distance grew under refinement");
      prev = d0;
    }
    MetricGraph g = discretize_metric(s, MetricKind::induced, 513);
    const double dhalf = distance_to_boundary(g, cx(0.5, 0));
    check(std::abs(dhalf - 0.5) <= 0.5 * 0.03 + g.domain.step(), "flat d(0.5) off");
  }

  // Gamma-metric radial fixture and the distance comparison
  {
    auto s = fixtures::harmonic_graph(65);
    MetricGraph g = discretize_metric(s, MetricKind::klotz, 513);
    const double d0 = distance_to_boundary(g, cx(0, 0));
    const double expected = std::sqrt(3.0) / 2.0 + std::asinh(std::sqrt(2.0)) / (2.0 * std::sqrt(2.0));
    check(std::abs(d0 - expected) <= 0.03 * expected,
          "Gamma distance fixture off: " + std::to_string(d0));

    auto rep = metric_comparison_check(s, 129);
    check(rep.pass(), "metric comparison failed");
    check(rep.max_eigen_excess <= 1e-9, "ds^2 exceeded 4|phi|^2|dz|^2");
  }

  // K = 1 surfaces: the two distances agree within grid error
  {
    auto s = fixtures::enneper(65);
    MetricGraph gi = discretize_metric(s, MetricKind::induced, 257);
    MetricGraph gk = discretize_metric(s, MetricKind::klotz, 257);
    auto di = boundary_distance_field(gi);
    auto dk = boundary_distance_field(gk);
    double worst = 0;
    for (std::size_t i = 0; i < gi.nodes.size(); i += 37) {
      const int j = gk.node_at(gi.nodes[i].z);
      if (j < 0) continue;
      worst = std::max(worst, std::abs(di[i] - dk[static_cast<std::size_t>(j)]));
    }
    check(worst <= 0.05, "conformal distances disagree: " + std::to_string(worst));
  }

  // pointwise curvature domination with the qc bound
  for (auto maker : {&fixtures::harmonic_graph, &fixtures::enneper}) {
    auto s = maker(65);
    const double K = s.qc_constant();
    const double c = std::pow((K * K + 1) / (2 * K), 4);
    GridFields f = s.evaluate_grid();
    bool ok = true;
    for (std::size_t i = 0; i < f.points.size(); ++i) {
      if (f.degenerate[i]) continue;
      if (std::abs(f.curvature[i].k_induced) >
          c * std::abs(f.curvature[i].k_klotz) + 1e-9)
        ok = false;
    }
    check(ok, "curvature domination |K_ds2| <= ((K^2+1)/2K)^4 |K_Gamma| failed");
  }
  return r;
}

} // namespace

const std::vector<std::pair<std::string, SuiteFn>>& all_suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"holomorphic-core", suite_holomorphic_core},
      {"harmonic-surface", suite_harmonic_surface},
      {"gauss-map", suite_gauss_map},
      {"derived-curves", suite_derived_curves},
      {"nochka", suite_nochka},
      {"defect-metrics", suite_defect_metrics},
      {"geodesy", suite_geodesy},
  };
  return suites;
}

std::vector<SuiteResult> run_suites(const SuiteOptions& opts, const std::string& only) {
  std::vector<SuiteResult> out;
  for (const auto& [name, fn] : all_suites()) {
    if (!only.empty() && name.find(only) == std::string::npos) continue;
    out.push_back(fn(opts));
  }
  return out;
}

} // namespace harmonia::verify
