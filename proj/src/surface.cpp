#include "harmonia/surface.hpp"

#include <cmath>
#include <limits>

namespace harmonia {

namespace {
constexpr double kDegenerateRel = 1e-14; // |phi|^4 - |h|^2 below this x |phi|^4 is degenerate
}

HarmonicImmersion::HarmonicImmersion(std::vector<ComplexPoly> phi, DiskDomain domain)
    : phi_(std::move(phi)), domain_(domain) {
  if (phi_.size() < 3)
    raise(Errc::dimension_mismatch, "harmonic immersion needs dimension n >= 3");
  bool all_zero = true;
  for (const auto& p : phi_)
    if (!p.is_zero()) all_zero = false;
  if (all_zero) raise(Errc::degenerate_point, "phi vanishes identically");
  dphi_.reserve(phi_.size());
  for (const auto& p : phi_) dphi_.push_back(p.derivative());
}

ComplexPoly HarmonicImmersion::hopf_polynomial() const {
  ComplexPoly h;
  for (const auto& p : phi_) h += p * p;
  return h;
}

std::vector<double> HarmonicImmersion::position(cx z) const {
  std::vector<double> x(phi_.size());
  for (std::size_t k = 0; k < phi_.size(); ++k) {
    ComplexPoly prim = phi_[k].antiderivative();
    x[k] = 2.0 * (prim(z) - prim(domain_.center)).real();
  }
  return x;
}

HarmonicImmersion::PointData HarmonicImmersion::point_data(cx z) const {
  kernels::SurfaceBatch b;
  const double zr = z.real(), zi = z.imag();
  kernels::surface_batch(phi_, dphi_, std::span(&zr, 1), std::span(&zi, 1), b);
  PointData p;
  p.m.phi_norm_sq = b.phi_norm_sq[0];
  p.m.h = cx(b.h_re[0], b.h_im[0]);
  p.m.e = b.e[0];
  p.m.f = b.f[0];
  p.m.g = b.g[0];
  p.m.grad_norm_sq = b.e[0] + b.g[0];
  const double disc = p.m.phi_norm_sq * p.m.phi_norm_sq - std::norm(p.m.h);
  p.m.jacobian = 2.0 * std::sqrt(std::max(0.0, disc));
  p.dphi_norm_sq = b.dphi_norm_sq[0];
  p.dot = cx(b.dot_re[0], b.dot_im[0]);
  p.trip = cx(b.trip_re[0], b.trip_im[0]);
  const double scale = p.m.phi_norm_sq * p.m.phi_norm_sq;
  p.degenerate = !(p.m.phi_norm_sq > 0.0) || disc < kDegenerateRel * scale;
  return p;
}

bool HarmonicImmersion::degenerate_at(cx z) const { return point_data(z).degenerate; }

MetricSample HarmonicImmersion::metric_sample(cx z) const {
  PointData p = point_data(z);
  if (!(p.m.phi_norm_sq > 0.0))
    raise(Errc::degenerate_point, "phi vanishes at the sample point");
  return p.m;
}

std::array<double, 3> HarmonicImmersion::unit_normal(cx z) const {
  if (dimension() != 3) raise(Errc::dimension_mismatch, "unit normal needs n == 3");
  PointData p = point_data(z);
  if (p.degenerate) raise(Errc::degenerate_point, "Jacobian vanishes at the sample point");
  // n = i (conj(phi) x phi) / sqrt(|phi|^4 - |h|^2); the cross product is
  // purely imaginary so i*w is real.
  std::array<cx, 3> v;
  for (int k = 0; k < 3; ++k) v[static_cast<std::size_t>(k)] = phi_[static_cast<std::size_t>(k)](z);
  const cx w0 = std::conj(v[1]) * v[2] - std::conj(v[2]) * v[1];
  const cx w1 = std::conj(v[2]) * v[0] - std::conj(v[0]) * v[2];
  const cx w2 = std::conj(v[0]) * v[1] - std::conj(v[1]) * v[0];
  const double denom = 0.5 * p.m.jacobian;
  return {(cx(0, 1) * w0).real() / denom, (cx(0, 1) * w1).real() / denom,
          (cx(0, 1) * w2).real() / denom};
}

double HarmonicImmersion::klotz_from(const PointData& p) {
  const double n2 = p.m.phi_norm_sq;
  const double num = p.dphi_norm_sq * n2 - std::norm(p.dot);
  return -num / (n2 * n2 * n2);
}

double HarmonicImmersion::induced_from(const PointData& p) {
  const double disc = p.m.phi_norm_sq * p.m.phi_norm_sq - std::norm(p.m.h);
  return -std::norm(p.trip) / (disc * disc);
}

double HarmonicImmersion::curvature_klotz(cx z) const {
  PointData p = point_data(z);
  if (!(p.m.phi_norm_sq > 0.0))
    raise(Errc::degenerate_point, "phi vanishes at the sample point");
  return klotz_from(p);
}

double HarmonicImmersion::curvature_induced(cx z) const {
  if (dimension() != 3) raise(Errc::dimension_mismatch, "induced curvature needs n == 3");
  PointData p = point_data(z);
  if (p.degenerate) raise(Errc::degenerate_point, "immersion degenerates at the sample point");
  return induced_from(p);
}

double HarmonicImmersion::lagrange_residual(cx z) const {
  if (dimension() != 3) raise(Errc::dimension_mismatch, "Lagrange identity stated for n == 3");
  std::array<cx, 3> v, d;
  for (int k = 0; k < 3; ++k) {
    v[static_cast<std::size_t>(k)] = phi_[static_cast<std::size_t>(k)](z);
    d[static_cast<std::size_t>(k)] = dphi_[static_cast<std::size_t>(k)](z);
  }
  double dn = 0, vn = 0;
  cx dot(0);
  for (int k = 0; k < 3; ++k) {
    dn += std::norm(d[static_cast<std::size_t>(k)]);
    vn += std::norm(v[static_cast<std::size_t>(k)]);
    dot += d[static_cast<std::size_t>(k)] * std::conj(v[static_cast<std::size_t>(k)]);
  }
  // |phi' x phi|^2 = |phi'|^2 |phi|^2 - |<phi', phi>|^2 (complex Lagrange)
  const cx c0 = d[1] * v[2] - d[2] * v[1];
  const cx c1 = d[2] * v[0] - d[0] * v[2];
  const cx c2 = d[0] * v[1] - d[1] * v[0];
  const double cross = std::norm(c0) + std::norm(c1) + std::norm(c2);
  return std::abs((dn * vn - std::norm(dot)) - cross);
}

GridFields HarmonicImmersion::evaluate_at(std::span<const cx> zs) const {
  GridFields out;
  const std::size_t n = zs.size();
  out.points.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.points[i] = {zs[i], 0, 0};
  std::vector<double> zre(n), zim(n);
  for (std::size_t i = 0; i < n; ++i) {
    zre[i] = zs[i].real();
    zim[i] = zs[i].imag();
  }
  kernels::SurfaceBatch b;
  b.resize(n);
  parallel_for(n, [&](std::size_t lo, std::size_t hi) {
    const std::size_t len = hi - lo;
#if defined(HARMONIA_COMPILE_AVX2)
    if (kernels::active_isa() == kernels::Isa::avx2) {
      kernels::detail::surface_avx2(phi_, dphi_, zre.data() + lo, zim.data() + lo, len, b, lo);
      return;
    }
#endif
    kernels::detail::surface_scalar(phi_, dphi_, zre.data() + lo, zim.data() + lo, len, b, lo);
  });

  out.metric.resize(n);
  out.curvature.resize(n);
  out.degenerate.assign(n, 0);
  const bool three = dimension() == 3;
  for (std::size_t i = 0; i < n; ++i) {
    MetricSample& m = out.metric[i];
    m.phi_norm_sq = b.phi_norm_sq[i];
    m.h = cx(b.h_re[i], b.h_im[i]);
    m.e = b.e[i];
    m.f = b.f[i];
    m.g = b.g[i];
    m.grad_norm_sq = b.e[i] + b.g[i];
    const double disc = m.phi_norm_sq * m.phi_norm_sq - std::norm(m.h);
    m.jacobian = 2.0 * std::sqrt(std::max(0.0, disc));
    const bool degen =
        !(m.phi_norm_sq > 0.0) || disc < kDegenerateRel * m.phi_norm_sq * m.phi_norm_sq;
    if (degen) {
      out.degenerate[i] = 1;
      ++out.degenerate_count;
      out.curvature[i] = {std::numeric_limits<double>::quiet_NaN(),
                          std::numeric_limits<double>::quiet_NaN()};
      continue;
    }
    const double num = b.dphi_norm_sq[i] * m.phi_norm_sq - std::norm(cx(b.dot_re[i], b.dot_im[i]));
    out.curvature[i].k_klotz = -num / (m.phi_norm_sq * m.phi_norm_sq * m.phi_norm_sq);
    out.curvature[i].k_induced =
        three ? -std::norm(cx(b.trip_re[i], b.trip_im[i])) / (disc * disc)
              : std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

GridFields HarmonicImmersion::evaluate_grid() const {
  auto pts = domain_.grid();
  std::vector<cx> zs(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) zs[i] = pts[i].z;
  GridFields out = evaluate_at(zs);
  out.points = std::move(pts);
  return out;
}

double qc_k_from_lambda(double lambda) {
  if (lambda < 1.0) lambda = 1.0;
  return lambda + std::sqrt(lambda * lambda - 1.0);
}

double HarmonicImmersion::qc_constant(int boundary_samples) const {
  // exactly conformal data short-circuits to K = 1
  if (hopf_polynomial().is_zero()) return 1.0;

  auto pts = domain_.grid();
  std::vector<cx> zs;
  zs.reserve(pts.size() + static_cast<std::size_t>(boundary_samples));
  for (const auto& p : pts) zs.push_back(p.z);
  for (cx z : domain_.boundary_ring(boundary_samples)) zs.push_back(z);

  GridFields f = evaluate_at(zs);
  double sup_lambda = 1.0;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const MetricSample& m = f.metric[i];
    if (f.degenerate[i])
      raise(Errc::not_quasiconformal, "|h| reaches |phi|^2: dilatation is unbounded");
    const double disc = m.phi_norm_sq * m.phi_norm_sq - std::norm(m.h);
    sup_lambda = std::max(sup_lambda, m.phi_norm_sq / std::sqrt(disc));
  }
  return qc_k_from_lambda(sup_lambda);
}

RatioBoundReport HarmonicImmersion::curvature_ratio_bound_check() const {
  RatioBoundReport rep;
  rep.qc = qc_constant();
  const double t = 2.0 * rep.qc / (rep.qc * rep.qc + 1.0);
  rep.bound = t * t * t * t;
  rep.min_margin = std::numeric_limits<double>::infinity();
  GridFields f = evaluate_grid();
  for (std::size_t i = 0; i < f.points.size(); ++i) {
    if (f.degenerate[i]) {
      ++rep.skipped;
      continue;
    }
    const double kd = f.curvature[i].k_induced;
    if (kd == 0.0) {
      ++rep.skipped;
      continue;
    }
    const double ratio = std::abs(f.curvature[i].k_klotz) / std::abs(kd);
    const double margin = ratio - rep.bound;
    ++rep.checked;
    if (margin < rep.min_margin) {
      rep.min_margin = margin;
      rep.worst_point = f.points[i].z;
    }
    if (margin < -1e-9) ++rep.violations;
  }
  return rep;
}

} // namespace harmonia
