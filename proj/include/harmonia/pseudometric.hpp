#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "harmonia/defect.hpp"
#include "harmonia/derived.hpp"
#include "harmonia/domain.hpp"

namespace harmonia {

// A conformal field on a disk, evaluated in the log domain (-inf encodes a
// zero of the field). `singular` lists the points where the defining
// polynomials vanish; quadrature and curvature checks keep clear of them.
class PseudoMetricField {
public:
  enum class Kind { xi, omega, dsigma, custom };

  PseudoMetricField(Kind kind, DiskDomain domain, std::function<double(cx)> log_eval,
                    std::vector<cx> singular = {})
      : kind_(kind), domain_(domain), log_eval_(std::move(log_eval)),
        singular_(std::move(singular)) {}

  Kind kind() const { return kind_; }
  const DiskDomain& domain() const { return domain_; }
  const std::vector<cx>& singular_points() const { return singular_; }

  double log_value(cx z) const { return log_eval_(z); }
  double value(cx z) const { return std::exp(log_eval_(z)); }

  std::vector<double> grid_values() const;

  PseudoMetricField scaled(double factor) const;

private:
  Kind kind_;
  DiskDomain domain_;
  std::function<double(cx)> log_eval_;
  std::vector<cx> singular_;
};

// The curvature-bounded field xi together with its Omega companion
// (Omega = xi^{2 / sum_{s<=k} s(1 + 2qs/N)}, extended by 0 on the excluded
// analytic set).
struct XiOmegaField {
  PseudoMetricField xi;
  PseudoMetricField omega;
  DefectConfig cfg;
  double omega_exponent; // 2 / sum s(1 + 2qs/N)
};

XiOmegaField xi_field(const DerivedCurve& F, std::span<const Hyperplane> planes,
                      const DefectConfig& cfg,
                      std::span<const HarmonicCertificate> certificates, const DiskDomain& d);

// The d-sigma coefficient of the final construction: the |dz| factor
//   [ prod |<F,a_j>|^{w_j} / (e^{sum mu_j w_j} |W|^{1+2q/N} prod
//     (prod_{s<k} |xi_js|)^{4/N}) ]^{1/((1-tau) Lambda)}.
PseudoMetricField dsigma_field(const DerivedCurve& F, std::span<const Hyperplane> planes,
                               const DefectConfig& cfg,
                               std::span<const HarmonicCertificate> certificates,
                               const DiskDomain& d);

// sup over the grid of field * ((R^2 - |z|^2) / (2R))^2, the Ahlfors-Schwarz
// comparison for areal fields.
double ahlfors_schwarz_sup(const PseudoMetricField& field);

struct CurvatureCheckReport {
  double empirical_dk = 0.0;   // min over grid of (1/4 Lap log xi) / xi^{2 kappa}
  bool positive = false;
  std::size_t points = 0;
  double as_sup = 0.0;         // Ahlfors-Schwarz sup of Omega at base resolution
  double as_sup_refined = 0.0; // after one refinement
  bool as_stable = false;      // within 5%
};
CurvatureCheckReport pseudo_metric_curvature_check(const XiOmegaField& field);

struct RadialLengthResult {
  double length = 0.0;
  bool divergent = false;
  double worst_exponent = 0.0; // fitted local exponent at the blamed point
  cx blamed_point{0, 0};
};
// Length of the field along {t R e^{i angle} : 0 <= t < 1}. Divergence is
// flagged when partial sums blow past 1e9 or the local exponent at an on-ray
// singular point fits <= -1.
RadialLengthResult radial_length(const PseudoMetricField& field, double angle);

} // namespace harmonia
