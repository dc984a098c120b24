#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "harmonia/derived.hpp"
#include "harmonia/domain.hpp"
#include "harmonia/gauss_map.hpp"
#include "harmonia/nochka.hpp"
#include "harmonia/poly.hpp"

namespace harmonia {

// mu(z) = c log|g(z)| + Re(hre(z)), continuous into [-inf, inf) and harmonic
// off the zero set of g.
struct HarmonicCertificate {
  double c = 0.0;
  ComplexPoly g;   // empty means no log part
  ComplexPoly hre; // harmonic part Re(hre)

  double mu(cx z) const;
  // Continuity into [-inf, inf) needs c >= 0 whenever g vanishes inside d.
  bool valid_on(const DiskDomain& d) const;
};

// delta = 1 - deg<F, a>/d for a polynomial curve with max component degree d.
double classical_defect_polynomial(std::span<const ComplexPoly> F, const Hyperplane& H);

struct DefectRelationReport {
  std::vector<double> defects;
  double sum = 0.0;
  double bound = 0.0; // k + 1
  bool pass = false;
};
DefectRelationReport defect_relation_check(std::span<const ComplexPoly> F,
                                           std::span<const Hyperplane> planes);

struct CertificateDecision {
  bool accepted = false;
  bool h1_ok = false, h2_ok = false;
  std::string reason;
  struct RootTrace {
    cx z0;
    int order;
    std::vector<double> circle_maxima; // of mu - min(nu,k) log|z-z0|
  };
  std::vector<RootTrace> traces;
};
// Condition-(*) check: (H1) on the grid in log domain, (H2) on dyadically
// shrinking circles around each zero of <F, a>.
CertificateDecision check_certificate(std::span<const ComplexPoly> F, const Hyperplane& H,
                                      double eta, const HarmonicCertificate& mu,
                                      const DiskDomain& d);

// 1 - min accepted eta; 0 when nothing is accepted (the unconditional bound).
double modified_defect_bound(std::span<const ComplexPoly> F, const Hyperplane& H,
                             std::span<const std::pair<double, HarmonicCertificate>> certificates,
                             const DiskDomain& d);

// Constants for the pseudo-metric construction. n is the ambient dimension
// (curve target P^{n-1}); the weights are taken for (n-1)-subgeneral position.
struct DefectConfig {
  int q = 0, n = 0, k = 0;
  std::vector<double> eta;
  NochkaWeights weights;
  double N = 0.0;      // midpoint of the admissible window
  double Lambda = 0.0; // sum omega (1-eta) - (k+1) - (2q/N)(k^2+2k+1)
  double tau = 0.0;    // (k(k+1)/2 + (2q/N) sum s^2) / Lambda
  double kappa = 0.0;  // 1 / sum_{s<k} [(k-s) + (2q/N)(k-s)^2]
};

// Validates the hypothesis sum(1-eta) > (2n-k-1)(k/2+1), picks N, computes
// Lambda/tau/kappa and verifies 0 < tau < 1, 0 < N Lambda (1-tau) < 4.
// Throws HypothesisFailed / ConfigInvalid.
DefectConfig build_defect_config(int q, int n, int k, std::span<const double> eta,
                                 NochkaWeights weights);

} // namespace harmonia
