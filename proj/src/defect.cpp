#include "harmonia/defect.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "harmonia/roots.hpp"

namespace harmonia {

double HarmonicCertificate::mu(cx z) const {
  double v = hre.is_zero() ? 0.0 : hre(z).real();
  if (c != 0.0 && !g.is_zero()) {
    const double a = std::abs(g(z));
    v += (a == 0.0) ? (c > 0 ? -std::numeric_limits<double>::infinity()
                             : std::numeric_limits<double>::infinity())
                    : c * std::log(a);
  }
  return v;
}

bool HarmonicCertificate::valid_on(const DiskDomain& d) const {
  if (c >= 0.0 || g.is_zero() || g.degree() == 0) return true;
  return roots_in_domain(g, d).empty();
}

double classical_defect_polynomial(std::span<const ComplexPoly> F, const Hyperplane& H) {
  int dmax = 0;
  double scale = 0;
  for (const auto& f : F) {
    dmax = std::max(dmax, f.degree());
    scale = std::max(scale, f.coeff_norm_inf());
  }
  if (dmax < 1) raise(Errc::degenerate_curve, "constant curve has no defect relation");
  ComplexPoly p = pairing_poly(F, H).trimmed(1e-13 * scale);
  if (p.is_zero()) raise(Errc::degenerate_curve, "<F, a> vanishes identically");
  return 1.0 - static_cast<double>(std::max(p.degree(), 0)) / dmax;
}

DefectRelationReport defect_relation_check(std::span<const ComplexPoly> F,
                                           std::span<const Hyperplane> planes) {
  DefectRelationReport rep;
  const int k = nondegeneracy_rank(F);
  rep.bound = k + 1.0;
  for (const auto& H : planes) {
    const double d = classical_defect_polynomial(F, H);
    rep.defects.push_back(d);
    rep.sum += d;
  }
  rep.pass = rep.sum <= rep.bound + 1e-12;
  return rep;
}

CertificateDecision check_certificate(std::span<const ComplexPoly> F, const Hyperplane& H,
                                      double eta, const HarmonicCertificate& mu,
                                      const DiskDomain& d) {
  CertificateDecision out;
  if (eta < 0) raise(Errc::config_invalid, "eta must be nonnegative");
  if (!mu.valid_on(d)) {
    out.reason = "mu is not continuous into [-inf, inf): c < 0 at a zero of g";
    return out;
  }
  double scale = 0;
  for (const auto& f : F) scale = std::max(scale, f.coeff_norm_inf());
  ComplexPoly p = pairing_poly(F, H).trimmed(1e-13 * std::max(1.0, scale));
  if (p.is_zero()) raise(Errc::degenerate_curve, "<F, a> vanishes identically");
  const int k = nondegeneracy_rank(F);

  // (H1): e^mu <= ||F||^eta on the grid, in the log domain
  out.h1_ok = true;
  for (const auto& gp : d.grid()) {
    double fn = 0;
    for (const auto& f : F) fn += std::norm(f(gp.z));
    const double rhs = 0.5 * eta * std::log(std::max(fn, 1e-300));
    if (mu.mu(gp.z) > rhs + 1e-9) {
      out.h1_ok = false;
      out.reason = "(H1) fails on the grid";
      break;
    }
  }

  // (H2): circle maxima of mu - min(nu,k) log|z - z0| on dyadic radii must be
  // non-increasing (up to 1e-3) after the 4th level, or head to -inf.
  out.h2_ok = true;
  if (p.degree() > 0) {
    auto roots = roots_in_domain(p, d);
    for (const auto& rm : roots) {
      CertificateDecision::RootTrace tr;
      tr.z0 = rm.root;
      tr.order = rm.multiplicity;
      const double m = std::min(rm.multiplicity, k);
      double r0 = 0.05 * d.radius;
      for (const auto& other : roots)
        if (std::abs(other.root - rm.root) > 1e-12)
          r0 = std::min(r0, 0.25 * std::abs(other.root - rm.root));
      for (int level = 1; level <= 12; ++level) {
        const double r = r0 * std::pow(2.0, -level);
        double mx = -std::numeric_limits<double>::infinity();
        for (int a = 0; a < 64; ++a) {
          const double ang = 2.0 * M_PI * a / 64;
          const cx z = rm.root + r * cx(std::cos(ang), std::sin(ang));
          mx = std::max(mx, mu.mu(z) - m * std::log(std::abs(z - rm.root)));
        }
        tr.circle_maxima.push_back(mx);
      }
      for (std::size_t i = 4; i + 1 < tr.circle_maxima.size(); ++i) {
        if (tr.circle_maxima[i + 1] > tr.circle_maxima[i] + 1e-3) {
          out.h2_ok = false;
          out.reason = "(H2) circle maxima increase: no finite upper limit";
        }
      }
      out.traces.push_back(std::move(tr));
      if (!out.h2_ok) break;
    }
  }
  out.accepted = out.h1_ok && out.h2_ok;
  if (out.accepted) out.reason = "accepted";
  return out;
}

double modified_defect_bound(std::span<const ComplexPoly> F, const Hyperplane& H,
                             std::span<const std::pair<double, HarmonicCertificate>> certificates,
                             const DiskDomain& d) {
  double best_eta = std::numeric_limits<double>::infinity();
  for (const auto& [eta, cert] : certificates)
    if (check_certificate(F, H, eta, cert, d).accepted) best_eta = std::min(best_eta, eta);
  if (!std::isfinite(best_eta)) return 0.0;
  return 1.0 - best_eta;
}

DefectConfig build_defect_config(int q, int n, int k, std::span<const double> eta,
                                 NochkaWeights weights) {
  if (static_cast<int>(eta.size()) != q) raise(Errc::config_invalid, "need one eta per plane");
  for (double e : eta)
    if (e < 0) raise(Errc::config_invalid, "eta must be nonnegative");
  if (weights.q != q || weights.k != k || weights.n != n - 1)
    raise(Errc::config_invalid, "weights must come from (n-1)-subgeneral position for these planes");

  double sum_1me = 0;
  for (double e : eta) sum_1me += 1.0 - e;
  const double threshold = (2.0 * n - k - 1.0) * (k / 2.0 + 1.0);
  if (!(sum_1me > threshold))
    raise(Errc::hypothesis_failed, "sum(1 - eta) must exceed (2n-k-1)(k/2+1)");

  double sum_w1me = 0;
  for (int j = 0; j < q; ++j)
    sum_w1me += weights.omega[static_cast<std::size_t>(j)] * (1.0 - eta[static_cast<std::size_t>(j)]);

  // chain inequality from the hypothesis; positive P makes the N window open
  const double P = sum_w1me - (k / 2.0 + 1.0) * (k + 1.0);
  if (!(P > 0)) raise(Errc::hypothesis_failed, "weighted defect sum too small for the window");

  double sum_s2 = 0;
  for (int s = 0; s <= k; ++s) sum_s2 += static_cast<double>(s) * s;
  const double D0 = k * k + 2.0 * k + 1.0 + sum_s2;
  const double D1 = D0 + 2.0 / q;
  const double N_lo = 2.0 * q * D0 / P;
  const double N_hi = 2.0 * q * D1 / P;

  DefectConfig cfg;
  cfg.q = q;
  cfg.n = n;
  cfg.k = k;
  cfg.eta.assign(eta.begin(), eta.end());
  cfg.weights = std::move(weights);
  cfg.N = 0.5 * (N_lo + N_hi);
  const double x = 2.0 * q / cfg.N;
  cfg.Lambda = sum_w1me - (k + 1.0) - x * (k * k + 2.0 * k + 1.0);
  cfg.tau = (0.5 * k * (k + 1.0) + x * sum_s2) / cfg.Lambda;
  double denom = 0;
  for (int s = 0; s < k; ++s) {
    const double ks = k - s;
    denom += ks + x * ks * ks;
  }
  cfg.kappa = 1.0 / denom;

  if (!(cfg.tau > 0 && cfg.tau < 1))
    raise(Errc::config_invalid, "tau escaped (0, 1): degenerate configuration");
  const double NL1t = cfg.N * cfg.Lambda * (1.0 - cfg.tau);
  if (!(NL1t > 0 && NL1t < 4))
    raise(Errc::config_invalid, "N Lambda (1 - tau) escaped (0, 4)");
  return cfg;
}

} // namespace harmonia
