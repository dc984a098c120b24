#include <doctest.h>

#include "harmonia/fixtures.hpp"
#include "harmonia/geodesy.hpp"

using namespace harmonia;

TEST_CASE("discretize_metric edge weights") {
  // flat surface: axis edges weigh exactly one grid step
  auto f = fixtures::flat(33);
  MetricGraph g = discretize_metric(f, MetricKind::induced);
  const double step = g.domain.step();
  bool found_axis = false;
  for (std::size_t i = 0; i < g.nodes.size() && !found_axis; ++i)
    for (std::size_t a = g.adj_offset[i]; a < g.adj_offset[i + 1]; ++a) {
      const auto& nb = g.nodes[static_cast<std::size_t>(g.adj_node[a])];
      if (nb.ix == g.nodes[i].ix + 1 && nb.iy == g.nodes[i].iy) {
        CHECK(g.adj_weight[a] == doctest::Approx(step).epsilon(1e-12));
        found_axis = true;
        break;
      }
    }
  CHECK(found_axis);

  // Klotz edges on the graph fixture scale like sqrt(1 + 2 r^2)
  auto s = fixtures::harmonic_graph(33);
  MetricGraph gk = discretize_metric(s, MetricKind::klotz);
  for (std::size_t i = 0; i < gk.nodes.size(); i += 57)
    for (std::size_t a = gk.adj_offset[i]; a < gk.adj_offset[i + 1]; ++a) {
      const auto& nb = gk.nodes[static_cast<std::size_t>(gk.adj_node[a])];
      const cx mid = 0.5 * (gk.nodes[i].z + nb.z);
      const double want = std::sqrt(1.0 + 2.0 * std::norm(mid)) * std::abs(nb.z - gk.nodes[i].z);
      CHECK(gk.adj_weight[a] == doctest::Approx(want).epsilon(1e-12));
    }

  // anisotropy where Re h != 0: the (1,0) and (0,1) edge weights differ
  MetricGraph gi = discretize_metric(s, MetricKind::induced);
  const int c = gi.node_at(cx(0.5, 0));
  REQUIRE(c >= 0);
  double wx = 0, wy = 0;
  for (std::size_t a = gi.adj_offset[static_cast<std::size_t>(c)];
       a < gi.adj_offset[static_cast<std::size_t>(c) + 1]; ++a) {
    const auto& nb = gi.nodes[static_cast<std::size_t>(gi.adj_node[a])];
    const auto& me = gi.nodes[static_cast<std::size_t>(c)];
    if (nb.ix == me.ix + 1 && nb.iy == me.iy) wx = gi.adj_weight[a];
    if (nb.ix == me.ix && nb.iy == me.iy + 1) wy = gi.adj_weight[a];
  }
  REQUIRE(wx > 0);
  REQUIRE(wy > 0);
  CHECK(std::abs(wx - wy) > 1e-3 * wx);
}

TEST_CASE("flat disk distances") {
  auto f = fixtures::flat(33);
  MetricGraph g = discretize_metric(f, MetricKind::induced, 513);
  auto field = boundary_distance_field(g);
  CHECK(distance_to_boundary(g, field, cx(0, 0)) == doctest::Approx(1.0).epsilon(0.03));
  CHECK(distance_to_boundary(g, field, cx(0.5, 0)) == doctest::Approx(0.5).epsilon(0.035));
}

TEST_CASE("Klotz radial distance fixture") {
  auto s = fixtures::harmonic_graph(33);
  MetricGraph g = discretize_metric(s, MetricKind::klotz, 513);
  const double want = std::sqrt(3.0) / 2.0 + std::asinh(std::sqrt(2.0)) / (2.0 * std::sqrt(2.0));
  CHECK(distance_to_boundary(g, cx(0, 0)) == doctest::Approx(want).epsilon(0.03));
}

TEST_CASE("distance field is 1-Lipschitz along edges") {
  auto s = fixtures::harmonic_graph(33);
  MetricGraph g = discretize_metric(s, MetricKind::induced, 129);
  auto d = boundary_distance_field(g);
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    for (std::size_t a = g.adj_offset[i]; a < g.adj_offset[i + 1]; ++a) {
      const double gap = std::abs(d[i] - d[static_cast<std::size_t>(g.adj_node[a])]);
      REQUIRE(gap <= g.adj_weight[a] + 1e-12);
    }
}

TEST_CASE("monotone refinement") {
  auto f = fixtures::flat(33);
  double prev = 1e300;
  for (int res : {65, 129, 257}) {
    MetricGraph g = discretize_metric(f, MetricKind::induced, res);
    const double d0 = distance_to_boundary(g, cx(0, 0));
    CHECK(d0 <= prev * 1.005);
    prev = d0;
  }
}

TEST_CASE("metric comparison on the fixtures") {
  auto s = fixtures::harmonic_graph(65);
  auto rep = metric_comparison_check(s, 129);
  CHECK(rep.qc == doctest::Approx(std::sqrt(5.0)).epsilon(1e-9));
  CHECK(rep.pass());
  CHECK(rep.max_eigen_excess <= 1e-9);
  CHECK(rep.worst_distance_slack >= 0);

  // Enneper: conformal, both metrics agree and the sandwich is tight
  auto e = fixtures::enneper(65);
  auto erep = metric_comparison_check(e, 129);
  CHECK(erep.qc == doctest::Approx(1.0));
  CHECK(erep.pass());
  CHECK(erep.sandwich_lo == doctest::Approx(1.0));
  CHECK(erep.sandwich_hi == doctest::Approx(1.0));
}

TEST_CASE("curvature_estimate_scan preconditions") {
  auto s = fixtures::harmonic_graph(33);
  std::vector<Direction> coplanar{Direction::of(1, 0, 0), Direction::of(0, 1, 0),
                                  Direction::of(1, 1, 0), Direction::of(0, 0, 1),
                                  Direction::of(1, 2, 3), Direction::of(3, 1, 2),
                                  Direction::of(2, 3, 1)};
  CHECK_THROWS_AS(curvature_estimate_scan(s, coplanar, 65), Error);

  // a met hyperplane: |d3| > 1/sqrt(5) puts the pairing root inside the disk
  auto dirs = fixtures::seven_directions();
  auto bad = dirs;
  bad[3] = Direction::of(0.1, 0.1, 1.0);
  CHECK_THROWS_AS(curvature_estimate_scan(s, bad, 65), Error);
}

TEST_CASE("curvature_estimate_scan fixtures") {
  auto flat = fixtures::flat(33);
  auto dirs = fixtures::seven_directions();
  auto frep = curvature_estimate_scan(flat, dirs, 129);
  CHECK(frep.sup_kd2 == doctest::Approx(0.0));

  auto s = fixtures::harmonic_graph(33);
  auto rep = curvature_estimate_scan(s, dirs, 129);
  CHECK(rep.sup_kd2 > 0);
  CHECK(std::isfinite(rep.sup_kd2));
  MESSAGE("sup |K| d^2 at 129: ", rep.sup_kd2, " argmax ", rep.argmax.real(), "+",
          rep.argmax.imag(), "i");

  auto rep2 = curvature_estimate_scan(s, dirs, 257);
  CHECK(std::abs(rep2.sup_kd2 - rep.sup_kd2) <= 0.10 * rep.sup_kd2);

  // parametrization invariance: X(2z) on the half disk has phi~ = 2 phi(2z)
  // and carries the same geometry, so sup |K| d^2 must agree
  std::vector<ComplexPoly> half{ComplexPoly::constant(cx(1, 0)), ComplexPoly::constant(cx(0, -1)),
                                ComplexPoly({cx(0, 0), cx(4, 0)})};
  HarmonicImmersion shrunk(half, DiskDomain(cx(0, 0), 0.5, 33));
  auto rep3 = curvature_estimate_scan(shrunk, dirs, 257);
  CHECK(std::abs(rep3.sup_kd2 - rep2.sup_kd2) <= 0.10 * rep2.sup_kd2);
}
