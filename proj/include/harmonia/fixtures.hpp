#pragma once

#include <vector>

#include "harmonia/gauss_map.hpp"
#include "harmonia/surface.hpp"
#include "harmonia/util.hpp"

namespace harmonia::fixtures {

// phi = (1/2, -i/2, z): the harmonic graph (u, v, uv)-type example with
// h = z^2 and K = sqrt(5) on the closed unit disk.
inline HarmonicImmersion harmonic_graph(int res = 129) {
  std::vector<ComplexPoly> phi{ComplexPoly({cx(0.5, 0)}), ComplexPoly({cx(0, -0.5)}),
                               ComplexPoly({cx(0, 0), cx(1, 0)})};
  return HarmonicImmersion(std::move(phi), DiskDomain(cx(0, 0), 1.0, res));
}

// Enneper data phi = ((1-z^2)/2, i(1+z^2)/2, z): conformal, h = 0.
inline HarmonicImmersion enneper(int res = 129) {
  std::vector<ComplexPoly> phi{ComplexPoly({cx(0.5, 0), cx(0, 0), cx(-0.5, 0)}),
                               ComplexPoly({cx(0, 0.5), cx(0, 0), cx(0, 0.5)}),
                               ComplexPoly({cx(0, 0), cx(1, 0)})};
  return HarmonicImmersion(std::move(phi), DiskDomain(cx(0, 0), 1.0, res));
}

// phi = (1/2, -i/2, 0): a flat plane, K = 1, all curvatures zero.
inline HarmonicImmersion flat(int res = 129) {
  std::vector<ComplexPoly> phi{ComplexPoly({cx(0.5, 0)}), ComplexPoly({cx(0, -0.5)}),
                               ComplexPoly()};
  return HarmonicImmersion(std::move(phi), DiskDomain(cx(0, 0), 1.0, res));
}

inline ComplexPoly random_poly(Rng& rng, int maxdeg, double half = 1.0) {
  const int d = rng.uniform_int(0, maxdeg);
  std::vector<cx> c(static_cast<std::size_t>(d) + 1);
  for (auto& v : c) v = rng.complex_in_box(half);
  if (std::abs(c.back()) < 1e-3) c.back() += cx(0.5, 0.25); // keep the degree honest
  return ComplexPoly(std::move(c));
}

inline std::vector<ComplexPoly> random_phi(Rng& rng, int n, int maxdeg) {
  std::vector<ComplexPoly> phi;
  for (int i = 0; i < n; ++i) phi.push_back(random_poly(rng, maxdeg));
  return phi;
}

inline Hyperplane random_plane(Rng& rng, int dim) {
  std::vector<cx> a(static_cast<std::size_t>(dim));
  for (auto& v : a) v = rng.complex_in_box(1.0);
  return Hyperplane::from_normal(std::move(a));
}

inline std::vector<Hyperplane> random_planes(Rng& rng, int q, int dim) {
  std::vector<Hyperplane> out;
  for (int j = 0; j < q; ++j) out.push_back(random_plane(rng, dim));
  return out;
}

// Generic hyperplanes of P^{ambient-1} restricted to the coordinate
// P^k: normals project onto the first k+1 coordinates. The result is
// (ambient-1)-subgeneral in P^k almost surely.
inline std::vector<Hyperplane> restricted_planes(Rng& rng, int q, int ambient, int k) {
  std::vector<Hyperplane> out;
  while (static_cast<int>(out.size()) < q) {
    std::vector<cx> a(static_cast<std::size_t>(ambient));
    for (auto& v : a) v = rng.complex_in_box(1.0);
    std::vector<cx> r(a.begin(), a.begin() + k + 1);
    double n = 0;
    for (const cx& v : r) n += std::norm(v);
    if (n < 1e-2) continue;
    out.push_back(Hyperplane::from_normal(std::move(r)));
  }
  return out;
}

// Seven directions omitted by the harmonic-graph normal (all have
// |d_3| < 1/sqrt(5)) with no three in a common plane.
inline std::vector<Direction> seven_directions() {
  std::vector<Direction> dirs;
  for (int m = 0; m < 7; ++m) {
    const double alpha = M_PI * m / 7.0;
    const double beta = 0.10 + 0.03 * m;
    dirs.push_back(Direction::of(std::cos(alpha) * std::cos(beta),
                                 std::sin(alpha) * std::cos(beta), std::sin(beta)));
  }
  return dirs;
}

// Hyperplanes of P^1 whose pairing with F = (1, z) vanishes exactly at the
// given points: linear form -z0 * w0 + w1.
inline std::vector<Hyperplane> planes_through_points(std::span<const cx> pts) {
  std::vector<Hyperplane> out;
  for (cx z0 : pts) out.push_back(Hyperplane::from_linear_form({-z0, cx(1, 0)}));
  return out;
}

// The seven P^1 fixture points: radius 0.6, odd multiples of pi/7, so none
// sits on the positive real axis.
inline std::vector<cx> seven_p1_points() {
  std::vector<cx> pts;
  for (int j = 0; j < 7; ++j) {
    const double a = M_PI * (2 * j + 1) / 7.0;
    pts.push_back(0.6 * cx(std::cos(a), std::sin(a)));
  }
  return pts;
}

} // namespace harmonia::fixtures
