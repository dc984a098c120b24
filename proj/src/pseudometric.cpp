#include "harmonia/pseudometric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "harmonia/roots.hpp"

namespace harmonia {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_sum_sq(std::span<const ComplexPoly> polys, cx z) {
  double s = 0;
  for (const auto& p : polys) s += std::norm(p(z));
  return s > 0 ? std::log(s) : kNegInf;
}

// common zeros of a family = roots of the gcd of its members
std::vector<cx> common_zeros(std::span<const ComplexPoly> polys, const DiskDomain& d,
                             double scale) {
  ComplexPoly g;
  bool any = false;
  for (const auto& p : polys) {
    ComplexPoly t = p.trimmed(1e-12 * scale);
    if (t.is_zero()) continue;
    g = any ? poly_gcd(g, t) : t;
    any = true;
  }
  std::vector<cx> out;
  if (!any || g.degree() <= 0) return out;
  for (const auto& r : roots_in_domain(g, d)) out.push_back(r.root);
  return out;
}

void append_roots(std::vector<cx>& into, const ComplexPoly& p, const DiskDomain& d, double scale) {
  ComplexPoly t = p.trimmed(1e-12 * scale);
  if (t.is_zero() || t.degree() == 0) return;
  for (const auto& r : roots_in_domain(t, d)) into.push_back(r.root);
}

std::vector<cx> dedupe(std::vector<cx> pts) {
  std::vector<cx> out;
  for (cx z : pts) {
    bool seen = false;
    for (cx u : out)
      if (std::abs(u - z) < 1e-9) seen = true;
    if (!seen) out.push_back(z);
  }
  return out;
}

} // namespace

std::vector<double> PseudoMetricField::grid_values() const {
  std::vector<double> out;
  for (const auto& gp : domain_.grid()) out.push_back(value(gp.z));
  return out;
}

PseudoMetricField PseudoMetricField::scaled(double factor) const {
  const double lf = std::log(factor);
  auto inner = log_eval_;
  return PseudoMetricField(kind_, domain_, [inner, lf](cx z) { return inner(z) + lf; },
                           singular_);
}

XiOmegaField xi_field(const DerivedCurve& F, std::span<const Hyperplane> planes,
                      const DefectConfig& cfg,
                      std::span<const HarmonicCertificate> certificates, const DiskDomain& d) {
  const int k = F.k();
  const int q = static_cast<int>(planes.size());
  if (q != cfg.q || static_cast<int>(certificates.size()) != q)
    raise(Errc::config_invalid, "plane/certificate counts do not match the config");
  if (cfg.k != k) raise(Errc::config_invalid, "config k does not match the curve");

  const double x = 2.0 * q / cfg.N;

  struct Shared {
    std::vector<ComplexPoly> pairings;
    std::vector<std::vector<ComplexPoly>> derived;              // per s = 0..k
    std::vector<std::vector<std::vector<ComplexPoly>>> contracted; // [j][s]
    std::vector<HarmonicCertificate> mus;
    std::vector<double> omega;
    double lambda, x, N;
    int k, q;
  };
  auto sh = std::make_shared<Shared>();
  sh->lambda = cfg.Lambda;
  sh->x = x;
  sh->N = cfg.N;
  sh->k = k;
  sh->q = q;
  sh->omega = cfg.weights.omega;
  sh->mus.assign(certificates.begin(), certificates.end());

  double scale = 1.0;
  for (const auto& f : F.components()) scale = std::max(scale, f.coeff_norm_inf());

  for (const auto& H : planes) sh->pairings.push_back(pairing_poly(F.components(), H));
  for (int s = 0; s <= k; ++s) sh->derived.push_back(F.derived_polys(s));
  sh->contracted.resize(static_cast<std::size_t>(q));
  for (int j = 0; j < q; ++j)
    for (int s = 0; s < k; ++s)
      sh->contracted[static_cast<std::size_t>(j)].push_back(F.contracted_polys(s, planes[static_cast<std::size_t>(j)]));

  // excluded analytic set: zeros of any phi_s(a_j), s = 0..k-1, plus common
  // zeros of the derived families appearing with positive exponents
  std::vector<cx> sing;
  for (int j = 0; j < q; ++j) {
    append_roots(sing, sh->pairings[static_cast<std::size_t>(j)], d, scale);
    for (int s = 0; s < k; ++s) {
      auto cz = common_zeros(sh->contracted[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)], d, scale);
      sing.insert(sing.end(), cz.begin(), cz.end());
    }
  }
  for (int s = 1; s <= k; ++s) {
    auto cz = common_zeros(sh->derived[static_cast<std::size_t>(s)], d, scale);
    sing.insert(sing.end(), cz.begin(), cz.end());
  }
  sing = dedupe(std::move(sing));

  auto log_xi = [sh](cx z) -> double {
    std::vector<double> log_derived(static_cast<std::size_t>(sh->k) + 1);
    for (int s = 0; s <= sh->k; ++s)
      log_derived[static_cast<std::size_t>(s)] = log_sum_sq(sh->derived[static_cast<std::size_t>(s)], z);
    const double logF = 0.5 * log_derived[0];
    double acc = sh->lambda * logF;
    acc += (1.0 + sh->x) * 0.5 * log_derived[static_cast<std::size_t>(sh->k)];
    for (int s = 0; s < sh->k; ++s) acc += 2.0 * sh->x * 0.5 * log_derived[static_cast<std::size_t>(s)];
    for (int j = 0; j < sh->q; ++j) {
      const double la = std::abs(sh->pairings[static_cast<std::size_t>(j)](z));
      const double logpair = la > 0 ? std::log(la) : kNegInf;
      const double mu = sh->mus[static_cast<std::size_t>(j)].mu(z);
      if (logpair == kNegInf) return kNegInf; // excluded set, extended by 0
      acc += sh->omega[static_cast<std::size_t>(j)] * (mu - logpair);
      for (int s = 0; s < sh->k; ++s) {
        const double lc = log_sum_sq(sh->contracted[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)], z);
        if (lc == kNegInf) return kNegInf;
        const double log_phi = lc - log_derived[static_cast<std::size_t>(s)];
        acc -= std::log(sh->N - log_phi); // log phi_s <= 0, argument > N
      }
    }
    return acc;
  };

  double om_den = 0;
  for (int s = 0; s <= k; ++s) om_den += s * (1.0 + x * s);
  const double om_exp = 2.0 / om_den;

  PseudoMetricField xi(PseudoMetricField::Kind::xi, d, log_xi, sing);
  auto log_omega = [log_xi, om_exp](cx z) { return om_exp * log_xi(z); };
  PseudoMetricField omega(PseudoMetricField::Kind::omega, d, log_omega, sing);
  return XiOmegaField{std::move(xi), std::move(omega), cfg, om_exp};
}

PseudoMetricField dsigma_field(const DerivedCurve& F, std::span<const Hyperplane> planes,
                               const DefectConfig& cfg,
                               std::span<const HarmonicCertificate> certificates,
                               const DiskDomain& d) {
  const int k = F.k();
  const int q = static_cast<int>(planes.size());
  if (q != cfg.q || static_cast<int>(certificates.size()) != q)
    raise(Errc::config_invalid, "plane/certificate counts do not match the config");

  const double x = 2.0 * q / cfg.N;
  const double outer = 1.0 / ((1.0 - cfg.tau) * cfg.Lambda);

  struct Shared {
    std::vector<ComplexPoly> pairings;
    ComplexPoly top;
    std::vector<std::vector<ComplexPoly>> xi_js; // [j][s], first nonzero contracted
    std::vector<HarmonicCertificate> mus;
    std::vector<double> omega;
    double x, N, outer;
    int k, q;
  };
  auto sh = std::make_shared<Shared>();
  sh->x = x;
  sh->N = cfg.N;
  sh->outer = outer;
  sh->k = k;
  sh->q = q;
  sh->omega = cfg.weights.omega;
  sh->mus.assign(certificates.begin(), certificates.end());
  sh->top = F.top_wronskian();

  double scale = 1.0;
  for (const auto& f : F.components()) scale = std::max(scale, f.coeff_norm_inf());

  std::vector<cx> sing;
  for (const auto& H : planes) {
    sh->pairings.push_back(pairing_poly(F.components(), H));
    append_roots(sing, sh->pairings.back(), d, scale);
  }
  append_roots(sing, sh->top, d, scale);
  sh->xi_js.resize(static_cast<std::size_t>(q));
  for (int j = 0; j < q; ++j)
    for (int s = 0; s < k; ++s) {
      sh->xi_js[static_cast<std::size_t>(j)].push_back(
          F.first_nonzero_contracted(s, planes[static_cast<std::size_t>(j)]));
      append_roots(sing, sh->xi_js[static_cast<std::size_t>(j)].back(), d, scale);
    }
  for (int j = 0; j < q; ++j)
    if (!certificates[static_cast<std::size_t>(j)].g.is_zero())
      append_roots(sing, certificates[static_cast<std::size_t>(j)].g, d, scale);
  sing = dedupe(std::move(sing));

  auto log_eval = [sh](cx z) -> double {
    double acc = 0;
    for (int j = 0; j < sh->q; ++j) {
      const double la = std::abs(sh->pairings[static_cast<std::size_t>(j)](z));
      acc += sh->omega[static_cast<std::size_t>(j)] * (la > 0 ? std::log(la) : kNegInf);
      acc -= sh->omega[static_cast<std::size_t>(j)] * sh->mus[static_cast<std::size_t>(j)].mu(z);
      for (int s = 0; s < sh->k; ++s) {
        const double lx = std::abs(sh->xi_js[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)](z));
        acc -= (4.0 / sh->N) * (lx > 0 ? std::log(lx) : kNegInf);
      }
    }
    const double lw = std::abs(sh->top(z));
    acc -= (1.0 + sh->x) * (lw > 0 ? std::log(lw) : kNegInf);
    return sh->outer * acc;
  };
  return PseudoMetricField(PseudoMetricField::Kind::dsigma, d, log_eval, sing);
}

double ahlfors_schwarz_sup(const PseudoMetricField& field) {
  const DiskDomain& d = field.domain();
  const double R = d.radius;
  double sup = 0;
  for (const auto& gp : d.grid()) {
    const double r2 = std::norm(gp.z - d.center);
    const double w = (R * R - r2) / (2.0 * R);
    const double v = field.value(gp.z);
    if (std::isfinite(v)) sup = std::max(sup, v * w * w);
  }
  return sup;
}

CurvatureCheckReport pseudo_metric_curvature_check(const XiOmegaField& field) {
  CurvatureCheckReport rep;
  const DiskDomain& d = field.xi.domain();
  const double h = d.step();
  const double kappa = field.cfg.kappa;

  rep.empirical_dk = std::numeric_limits<double>::infinity();
  for (const auto& gp : d.grid()) {
    // stay clear of the excluded set and keep the stencil inside the mask
    bool clear = true;
    for (cx s : field.xi.singular_points())
      if (std::abs(gp.z - s) < 5 * h) clear = false;
    if (!clear) continue;
    const cx z = gp.z;
    const cx offs[4] = {cx(h, 0), cx(-h, 0), cx(0, h), cx(0, -h)};
    double lap = -4.0 * field.xi.log_value(z);
    bool ok = std::isfinite(lap);
    for (const cx& o : offs) {
      if (!d.in_mask(z + o)) {
        ok = false;
        break;
      }
      const double lv = field.xi.log_value(z + o);
      if (!std::isfinite(lv)) {
        ok = false;
        break;
      }
      lap += lv;
    }
    if (!ok) continue;
    lap /= h * h;
    const double xi_pow = std::exp(2.0 * kappa * field.xi.log_value(z));
    if (!(xi_pow > 0) || !std::isfinite(xi_pow)) continue;
    rep.empirical_dk = std::min(rep.empirical_dk, 0.25 * lap / xi_pow);
    ++rep.points;
  }
  rep.positive = rep.points > 0 && rep.empirical_dk > 0;

  rep.as_sup = ahlfors_schwarz_sup(field.omega);
  PseudoMetricField refined(field.omega.kind(),
                            d.with_resolution(2 * d.grid_resolution - 1),
                            [om = field.omega](cx z) { return om.log_value(z); },
                            field.omega.singular_points());
  rep.as_sup_refined = ahlfors_schwarz_sup(refined);
  rep.as_stable = std::abs(rep.as_sup_refined - rep.as_sup) <= 0.05 * std::max(rep.as_sup, 1e-300);
  return rep;
}

namespace {

struct Integrand {
  const PseudoMetricField* field;
  cx base, dir; // z(t) = base + t * dir, |dir| = R
  double operator()(double t) const {
    const double v = field->value(base + t * dir);
    return std::isfinite(v) ? v * std::abs(dir) : 1e300;
  }
};

double adaptive_simpson(const Integrand& f, double a, double b, double fa, double fb, double fm,
                        double tol, int depth, bool& blown, double cap) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
  const double left = (m - a) / 6.0 * (fa + 4 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4 * frm + fb);
  if (left + right > cap) {
    blown = true;
    return left + right;
  }
  if (depth <= 0 || std::abs(left + right - whole) < 15 * tol * (1 + std::abs(left + right)))
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, fa, fm, flm, tol * 0.5, depth - 1, blown, cap) +
         adaptive_simpson(f, m, b, fm, fb, frm, tol * 0.5, depth - 1, blown, cap);
}

double integrate_segment(const Integrand& f, double a, double b, bool& blown, double cap) {
  if (b <= a) return 0.0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  return adaptive_simpson(f, a, b, fa, fb, fm, 1e-8, 28, blown, cap);
}

// geometric shells toward the singular endpoint at t*; returns the shell sum
// and fits the local exponent from the shell decay ratio.
double shells_toward(const Integrand& f, double tstar, double eps0, int side, bool& divergent,
                     double& fitted_exponent, double cap) {
  double total = 0;
  double prev_shell = -1;
  std::vector<double> ratios;
  double eps_hi = eps0;
  for (int m = 0; m < 44; ++m) {
    const double eps_lo = 0.5 * eps_hi;
    const double a = side > 0 ? tstar + eps_lo : tstar - eps_hi;
    const double b = side > 0 ? tstar + eps_hi : tstar - eps_lo;
    // fixed Simpson inside one dyadic shell
    const int ns = 16;
    double shell = 0;
    for (int i = 0; i < ns; ++i) {
      const double x0 = a + (b - a) * i / ns;
      const double x1 = a + (b - a) * (i + 1) / ns;
      shell += (x1 - x0) / 6.0 * (f(x0) + 4 * f(0.5 * (x0 + x1)) + f(x1));
    }
    total += shell;
    if (prev_shell > 0 && shell > 0) ratios.push_back(shell / prev_shell);
    prev_shell = shell;
    if (total > cap) {
      divergent = true;
      break;
    }
    if (ratios.size() >= 6) {
      double recent = 0;
      for (std::size_t i = ratios.size() - 4; i < ratios.size(); ++i) recent += ratios[i];
      recent /= 4.0;
      // shell ratio ~ 2^{-(alpha+1)} for f ~ dist^alpha
      fitted_exponent = -1.0 - std::log2(std::max(recent, 1e-300));
      if (fitted_exponent <= -1.0 + 1e-3) {
        divergent = true;
        break;
      }
      if (recent < 0.75 && shell < 1e-13 * std::max(total, 1e-300)) {
        total += shell * recent / (1.0 - recent); // geometric tail
        break;
      }
    }
    eps_hi = eps_lo;
  }
  return total;
}

} // namespace

RadialLengthResult radial_length(const PseudoMetricField& field, double angle) {
  RadialLengthResult res;
  const DiskDomain& d = field.domain();
  const double R = d.radius;
  const cx dir = R * cx(std::cos(angle), std::sin(angle));
  Integrand f{&field, d.center, dir};

  // The 1e9 divergence cap is relative to the ray's median scale, so a
  // uniformly large but continuous field is not misread as divergent.
  std::vector<double> samples;
  for (int i = 0; i < 33; ++i) {
    const double v = f((i + 0.5) / 33.0);
    if (std::isfinite(v) && v < 1e299) samples.push_back(v);
  }
  std::sort(samples.begin(), samples.end());
  const double scale = samples.empty() ? 1.0 : std::max(1.0, samples[samples.size() / 2]);
  const double cap = 1e9 * scale;

  // singular points on the ray
  std::vector<double> ts;
  std::vector<cx> tpts;
  for (cx s : field.singular_points()) {
    const cx u = (s - d.center) / dir;
    if (std::abs(u.imag()) * R < 1e-9 && u.real() > 1e-12 && u.real() < 1.0) {
      ts.push_back(u.real());
      tpts.push_back(s);
    }
  }
  std::vector<std::size_t> order(ts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ts[a] < ts[b]; });

  bool blown = false;
  double total = 0;
  double cursor = 0.0;
  for (std::size_t oi = 0; oi < order.size() && !blown; ++oi) {
    const double t = ts[order[oi]];
    const double gap = t - cursor;
    if (gap <= 0) continue;
    const double eps0 = std::min(0.25 * gap, 1e-2);
    total += integrate_segment(f, cursor, t - eps0, blown, cap);
    if (blown) break;
    double fitted = 0;
    bool div = false;
    total += shells_toward(f, t, eps0, -1, div, fitted, cap - total);
    if (div) {
      res.divergent = true;
      res.worst_exponent = fitted;
      res.blamed_point = tpts[order[oi]];
      res.length = total;
      return res;
    }
    // leave the singular point on the other side
    const double next = (oi + 1 < order.size()) ? ts[order[oi + 1]] : 1.0;
    const double eps1 = std::min(0.25 * (next - t), 1e-2);
    total += shells_toward(f, t, eps1, +1, div, fitted, cap - total);
    if (div) {
      res.divergent = true;
      res.worst_exponent = fitted;
      res.blamed_point = tpts[order[oi]];
      res.length = total;
      return res;
    }
    cursor = t + eps1;
  }
  if (!blown && cursor < 1.0) total += integrate_segment(f, cursor, 1.0 - 1e-12, blown, cap);

  res.length = total;
  if (blown || total > cap) res.divergent = true;
  return res;
}

} // namespace harmonia
