#pragma once

#include <array>
#include <optional>
#include <vector>

#include "harmonia/domain.hpp"
#include "harmonia/kernels.hpp"
#include "harmonia/poly.hpp"

namespace harmonia {

// First-fundamental-form data at one point.
struct MetricSample {
  double e, f, g;       // ds^2 = E du^2 + 2F du dv + G dv^2
  cx h;                 // Hopf differential coefficient, sum phi_k^2
  double phi_norm_sq;   // sum |phi_k|^2
  double jacobian;      // 2 sqrt(phi_norm_sq^2 - |h|^2)
  double grad_norm_sq;  // E + G
};

struct CurvatureSample {
  double k_klotz;
  double k_induced; // NaN when dimension != 3
};

struct GridFields {
  std::vector<DiskDomain::GridPoint> points;
  std::vector<MetricSample> metric;
  std::vector<CurvatureSample> curvature;
  std::vector<std::uint8_t> degenerate; // 1 where the immersion degenerates
  std::size_t degenerate_count = 0;
};

struct RatioBoundReport {
  double qc; // the K used for the bound
  double bound;
  std::size_t checked = 0, skipped = 0, violations = 0;
  double min_margin = 0.0; // min over grid of ratio - bound
  cx worst_point{0, 0};
  bool pass() const { return violations == 0; }
};

// Harmonic immersion into R^n (n >= 3) given by holomorphic polynomial data
// phi = dX/dz. All pointwise quantities derive from phi and phi'.
class HarmonicImmersion {
public:
  HarmonicImmersion(std::vector<ComplexPoly> phi, DiskDomain domain);

  int dimension() const { return static_cast<int>(phi_.size()); }
  const DiskDomain& domain() const { return domain_; }
  const std::vector<ComplexPoly>& phi() const { return phi_; }
  const std::vector<ComplexPoly>& dphi() const { return dphi_; }

  // sum of phi_k^2 as an exact polynomial
  ComplexPoly hopf_polynomial() const;

  // X(z) = 2 Re Int phi dz with base point at the domain center
  std::vector<double> position(cx z) const;

  MetricSample metric_sample(cx z) const;
  std::array<double, 3> unit_normal(cx z) const;
  double curvature_klotz(cx z) const;
  double curvature_induced(cx z) const;
  double lagrange_residual(cx z) const;

  // Batch evaluation over the domain grid (kernel-backed).
  GridFields evaluate_grid() const;
  GridFields evaluate_at(std::span<const cx> zs) const;

  // Smallest K with |phi|^2 <= (K^2+1)/(2K) * sqrt(|phi|^4 - |h|^2) over the
  // closed disk: interior grid plus a boundary ring (the sup lives on the
  // closure). Throws NotQuasiconformal at degenerate sample points.
  double qc_constant(int boundary_samples = 4096) const;

  RatioBoundReport curvature_ratio_bound_check() const;

  bool degenerate_at(cx z) const;

private:
  struct PointData {
    MetricSample m;
    double dphi_norm_sq;
    cx dot;  // phi' . conj(phi)
    cx trip; // (conj(phi) x phi) . phi'  (only for n == 3)
    bool degenerate;
  };
  PointData point_data(cx z) const;
  static double klotz_from(const PointData& p);
  static double induced_from(const PointData& p);

  std::vector<ComplexPoly> phi_, dphi_;
  DiskDomain domain_;
};

// Pointwise quasiconformality factor lambda = |phi|^2 / sqrt(|phi|^4-|h|^2)
// and the K solving (K^2+1)/(2K) = lambda.
double qc_k_from_lambda(double lambda);

} // namespace harmonia
