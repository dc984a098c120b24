#include <doctest.h>

#include "harmonia/fixtures.hpp"
#include "harmonia/pseudometric.hpp"

using namespace harmonia;

namespace {

// the worked k = 1 instance: F = (1, z), seven P^1 planes, eta = 0,
// mu_j = log(|z - z_j| / 2)
struct Worked {
  std::vector<cx> pts = fixtures::seven_p1_points();
  std::vector<Hyperplane> planes = fixtures::planes_through_points(pts);
  NochkaWeights w = compute_nochka_weights(planes, 1);
  std::vector<double> eta = std::vector<double>(7, 0.0);
  DefectConfig cfg = build_defect_config(7, 2, 1, eta, w);
  std::vector<HarmonicCertificate> certs;
  DerivedCurve F{std::vector<ComplexPoly>{ComplexPoly::constant(cx(1, 0)),
                                          ComplexPoly::monomial(1)}};
  Worked() {
    for (cx z0 : pts) certs.push_back({1.0, ComplexPoly({-0.5 * z0, cx(0.5, 0)}), ComplexPoly()});
  }
};

PseudoMetricField poincare_field(double R, int res) {
  return PseudoMetricField(
      PseudoMetricField::Kind::custom, DiskDomain(cx(0, 0), R, res),
      [R](cx z) { return 2.0 * std::log(2.0 * R / (R * R - std::norm(z))); });
}

} // namespace

TEST_CASE("Ahlfors-Schwarz sanity fixtures") {
  auto f = poincare_field(1.0, 65);
  CHECK(ahlfors_schwarz_sup(f) == doctest::Approx(1.0).epsilon(1e-6));
  // doubling the length element quadruples the areal coefficient
  CHECK(ahlfors_schwarz_sup(f.scaled(4.0)) == doctest::Approx(4.0).epsilon(1e-6));

  auto f2 = poincare_field(2.0, 65);
  CHECK(ahlfors_schwarz_sup(f2) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("xi field: finite, positive, zero on the excluded set") {
  Worked wk;
  const DiskDomain d(cx(0, 0), 1.0, 65);
  XiOmegaField field = xi_field(wk.F, wk.planes, wk.cfg, wk.certs, d);

  const double at_half = field.xi.value(cx(0.5, 0));
  CHECK(std::isfinite(at_half));
  CHECK(at_half > 0);

  // Omega tends to 0 approaching a zero of prod <F, a_j>
  const cx z0 = wk.pts[0];
  double prev = 1e300;
  for (double eps : {1e-2, 1e-3, 1e-4, 1e-5}) {
    const double v = field.omega.value(z0 + cx(eps, 0));
    CHECK(v < prev);
    prev = v;
  }
  CHECK(prev < 1e-4);
  CHECK(field.omega.value(z0) == 0.0); // extended by zero on the excluded set

  // denominators N - log phi_s stay positive since phi_s <= 1
  for (int t = 0; t < 20; ++t) {
    Rng rng(t);
    cx z = rng.complex_in_disk(0.9);
    for (int j = 0; j < 7; ++j) {
      const double phi0 = wk.F.phi_s(0, wk.planes[static_cast<std::size_t>(j)], z);
      CHECK(phi0 <= 1.0 + 1e-10);
      CHECK(wk.cfg.N - std::log(std::max(phi0, 1e-300)) > 0);
    }
  }
}

TEST_CASE("xi regression value at z = 1/2") {
  Worked wk;
  const DiskDomain d(cx(0, 0), 1.0, 33);
  XiOmegaField field = xi_field(wk.F, wk.planes, wk.cfg, wk.certs, d);
  // independent direct-product evaluation (no log-domain accumulation)
  const cx z(0.5, 0);
  double direct = std::pow(1.0 + std::norm(z), 0.5 * wk.cfg.Lambda);
  const double x = 2.0 * 7 / wk.cfg.N;
  direct *= std::pow(1.0, 1.0 + x); // ||F~_1|| = |W(1,z)| = 1
  direct *= std::pow(std::sqrt(1.0 + std::norm(z)), 2.0 * x);
  for (int j = 0; j < 7; ++j) {
    const cx zj = wk.pts[static_cast<std::size_t>(j)];
    // the unit normal scales the pairing by 1/sqrt(1 + |z_j|^2)
    const double pairing = std::abs(z - zj) / std::sqrt(1.0 + std::norm(zj));
    const double mu = std::log(std::abs(z - zj) / 2.0);
    direct *= std::exp(mu) / pairing;
    const double phi0 = pairing * pairing / (1.0 + std::norm(z));
    direct /= wk.cfg.N - std::log(phi0);
  }
  CHECK(field.xi.value(z) == doctest::Approx(direct).epsilon(1e-10));
}

TEST_CASE("pseudo-metric curvature check on the worked instance") {
  Worked wk;
  const DiskDomain d(cx(0, 0), 1.0, 65);
  XiOmegaField field = xi_field(wk.F, wk.planes, wk.cfg, wk.certs, d);
  auto rep = pseudo_metric_curvature_check(field);
  CHECK(rep.points > 100);
  CHECK(rep.positive);
  CHECK(rep.as_stable);
  MESSAGE("empirical d_k = ", rep.empirical_dk, ", AS sup = ", rep.as_sup);

  // refinement stability of the empirical constant (one refinement)
  XiOmegaField fine = xi_field(wk.F, wk.planes, wk.cfg, wk.certs, d.with_resolution(129));
  auto rep2 = pseudo_metric_curvature_check(fine);
  CHECK(rep2.positive);
  CHECK(std::abs(rep2.empirical_dk - rep.empirical_dk) <= 0.10 * std::abs(rep.empirical_dk));
}

TEST_CASE("radial_length fixtures") {
  // flat field: length 1
  PseudoMetricField flat(PseudoMetricField::Kind::custom, DiskDomain(cx(0, 0), 1.0, 17),
                         [](cx) { return 0.0; });
  auto r = radial_length(flat, 0.7);
  CHECK(!r.divergent);
  CHECK(r.length == doctest::Approx(1.0).epsilon(1e-6));

  // non-integrable interior power: |z - 1/2|^p with p = -4/(N Lambda (1-tau))
  Worked wk;
  const double p = -4.0 / (wk.cfg.N * wk.cfg.Lambda * (1 - wk.cfg.tau));
  REQUIRE(p <= -1.0);
  PseudoMetricField sing(PseudoMetricField::Kind::custom, DiskDomain(cx(0, 0), 1.0, 17),
                         [p](cx z) { return p * std::log(std::abs(z - cx(0.5, 0))); },
                         {cx(0.5, 0)});
  auto rs = radial_length(sing, 0.0);
  CHECK(rs.divergent);
  CHECK(rs.worst_exponent <= -1.0 + 1e-3);

  // integrable interior power converges
  PseudoMetricField mild(PseudoMetricField::Kind::custom, DiskDomain(cx(0, 0), 1.0, 17),
                         [](cx z) { return -0.5 * std::log(std::abs(z - cx(0.5, 0))); },
                         {cx(0.5, 0)});
  auto rm = radial_length(mild, 0.0);
  CHECK(!rm.divergent);
  // oracle: int_0^1 |t - 1/2|^(-1/2) dt = 2 sqrt(2)
  CHECK(rm.length == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-3));
}

TEST_CASE("dsigma field radial length is finite on the worked instance") {
  Worked wk;
  const DiskDomain d(cx(0, 0), 1.0, 33);
  PseudoMetricField ds = dsigma_field(wk.F, wk.planes, wk.cfg, wk.certs, d);
  auto r = radial_length(ds, 0.0);
  CHECK(!r.divergent);
  CHECK(std::isfinite(r.length));
  CHECK(r.length > 0);
  MESSAGE("dsigma radial length along theta=0: ", r.length);
}
