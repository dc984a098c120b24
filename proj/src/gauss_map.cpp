#include "harmonia/gauss_map.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "harmonia/roots.hpp"

namespace harmonia {

namespace {
double norm_of(std::span<const cx> v) {
  double s = 0;
  for (const cx& c : v) s += std::norm(c);
  return std::sqrt(s);
}
} // namespace

Hyperplane Hyperplane::from_normal(std::vector<cx> a) {
  double n = norm_of(a);
  if (n < 1e-14) raise(Errc::config_invalid, "hyperplane normal must be nonzero");
  for (auto& c : a) c /= n;
  return Hyperplane{std::move(a)};
}

Hyperplane Hyperplane::from_linear_form(std::vector<cx> a) {
  for (auto& c : a) c = std::conj(c);
  return from_normal(std::move(a));
}

Direction Direction::of(double x, double y, double z) {
  double n = std::sqrt(x * x + y * y + z * z);
  if (n < 1e-14) raise(Errc::config_invalid, "direction must be nonzero");
  return Direction{{x / n, y / n, z / n}};
}

std::vector<ComplexPoly> reduced_representation(std::span<const ComplexPoly> phi) {
  ComplexPoly g;
  bool any = false;
  for (const auto& p : phi) {
    if (p.is_zero()) continue;
    g = any ? poly_gcd(g, p) : p;
    any = true;
  }
  if (!any) raise(Errc::all_zero, "all components vanish identically");
  std::vector<ComplexPoly> out;
  out.reserve(phi.size());
  if (g.degree() <= 0) {
    out.assign(phi.begin(), phi.end());
    return out;
  }
  const double scale = [&] {
    double s = 1.0;
    for (const auto& p : phi) s = std::max(s, p.coeff_norm_inf());
    return s;
  }();
  for (const auto& p : phi) {
    auto dv = poly_divmod(p, g);
    out.push_back(dv.quotient.trimmed(1e-12 * scale));
  }
  return out;
}

ComplexPoly pairing_poly(std::span<const ComplexPoly> F, const Hyperplane& H) {
  if (static_cast<int>(F.size()) != H.ambient())
    raise(Errc::dimension_mismatch, "curve and hyperplane live in different dimensions");
  ComplexPoly acc;
  for (std::size_t k = 0; k < F.size(); ++k) acc += std::conj(H.normal[k]) * F[k];
  return acc;
}

double hyperplane_distance(std::span<const ComplexPoly> F, const Hyperplane& H, cx z) {
  cx num(0);
  double den = 0;
  for (std::size_t k = 0; k < F.size(); ++k) {
    const cx v = F[k](z);
    num += v * std::conj(H.normal[k]);
    den += std::norm(v);
  }
  if (den < 1e-28) raise(Errc::indeterminate_point, "F(z) = 0, projective point undefined");
  return std::abs(num) / std::sqrt(den);
}

bool omits_hyperplane(std::span<const ComplexPoly> F, const Hyperplane& H, const DiskDomain& d) {
  ComplexPoly p = pairing_poly(F, H);
  double scale = 0;
  for (const auto& f : F) scale = std::max(scale, f.coeff_norm_inf());
  p = p.trimmed(1e-13 * std::max(1.0, scale));
  if (p.is_zero()) raise(Errc::degenerate_curve, "<F, a> vanishes identically");
  if (p.degree() == 0) return true;
  return roots_in_domain(p, d).empty();
}

Hyperplane direction_to_hyperplane(const Direction& d) {
  return Hyperplane::from_normal({cx(d.d[0], 0), cx(d.d[1], 0), cx(d.d[2], 0)});
}

SandwichReport angle_sandwich_check(const HarmonicImmersion& s, double K, cx z,
                                    const Direction& b, double tol) {
  if (s.dimension() != 3) raise(Errc::dimension_mismatch, "angle sandwich needs n == 3");
  MetricSample m = s.metric_sample(z);
  cx phidotb(0);
  for (int k = 0; k < 3; ++k) phidotb += s.phi()[static_cast<std::size_t>(k)](z) * b.d[static_cast<std::size_t>(k)];
  const double base = std::norm(phidotb) / m.phi_norm_sq;
  auto n = s.unit_normal(z);
  const double ndotb = n[0] * b.d[0] + n[1] * b.d[1] + n[2] * b.d[2];
  SandwichReport r;
  r.lower = (K * K + 1.0) / (2.0 * K * K) * base;
  r.upper = (K * K + 1.0) / 2.0 * base;
  r.middle = (1.0 - ndotb * ndotb) / 2.0;
  r.holds = r.lower <= r.middle + tol && r.middle <= r.upper + tol;
  r.max_equality_gap = std::max(std::abs(r.middle - r.lower), std::abs(r.upper - r.middle));
  return r;
}

bool general_position_check(std::span<const Hyperplane> planes, int ambient) {
  if (static_cast<int>(planes.size()) < ambient)
    raise(Errc::too_few, "need at least `ambient` hyperplanes");
  for (const auto& h : planes)
    if (h.ambient() != ambient)
      raise(Errc::dimension_mismatch, "hyperplane dimension differs from ambient");
  // enumerate all subsets of size `ambient`
  std::vector<int> c(static_cast<std::size_t>(ambient));
  for (int i = 0; i < ambient; ++i) c[static_cast<std::size_t>(i)] = i;
  const int q = static_cast<int>(planes.size());
  while (true) {
    Eigen::MatrixXcd M(ambient, ambient);
    for (int r = 0; r < ambient; ++r)
      for (int col = 0; col < ambient; ++col)
        M(r, col) = planes[static_cast<std::size_t>(c[static_cast<std::size_t>(r)])]
                        .normal[static_cast<std::size_t>(col)];
    if (std::abs(M.determinant()) <= 1e-10) return false;
    // next combination
    int i = ambient - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == q - ambient + i) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < ambient; ++j)
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return true;
}

std::vector<std::array<int, 3>> three_in_plane_check(std::span<const Direction> dirs) {
  if (dirs.size() < 3) raise(Errc::too_few, "need at least three directions");
  std::vector<std::array<int, 3>> bad;
  const int n = static_cast<int>(dirs.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const auto &a = dirs[static_cast<std::size_t>(i)].d, &b = dirs[static_cast<std::size_t>(j)].d,
                   &c = dirs[static_cast<std::size_t>(k)].d;
        const double det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
                           a[2] * (b[0] * c[1] - b[1] * c[0]);
        if (std::abs(det) <= 1e-10) bad.push_back({i, j, k});
      }
  return bad;
}

} // namespace harmonia
