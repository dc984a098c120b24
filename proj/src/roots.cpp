#include "harmonia/roots.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace harmonia {

namespace {

std::vector<cx> companion_eigenvalues(const ComplexPoly& p) {
  const int n = p.degree();
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
  const cx lead = p.leading();
  for (int i = 0; i < n; ++i) C(i, n - 1) = -p.coeff(i) / lead;
  for (int i = 1; i < n; ++i) C(i, i - 1) = cx(1);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, /*computeEigenvectors=*/false);
  std::vector<cx> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
  return out;
}

cx newton_polish(const ComplexPoly& p, const ComplexPoly& dp, cx z, int steps) {
  for (int i = 0; i < steps; ++i) {
    cx d = dp(z);
    if (std::abs(d) < 1e-300) break;
    cx step = p(z) / d;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
    z -= step;
  }
  return z;
}

// single-linkage clustering at the given radius
std::vector<std::vector<std::size_t>> cluster(const std::vector<cx>& pts, double radius) {
  const std::size_t n = pts.size();
  std::vector<int> label(n, -1);
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) {
    if (label[i] >= 0) continue;
    label[i] = static_cast<int>(groups.size());
    groups.push_back({i});
    for (std::size_t j = 0; j < groups.back().size(); ++j) {
      cx zi = pts[groups.back()[j]];
      for (std::size_t k = 0; k < n; ++k) {
        if (label[k] >= 0) continue;
        if (std::abs(pts[k] - zi) <= radius) {
          label[k] = label[i];
          groups.back().push_back(k);
        }
      }
    }
  }
  return groups;
}

// Newton toward a root of order m, with the order hypothesis iterated
// against the derivative test: a root of order m is a simple root of
// p^(m-1), where Newton converges quadratically.
cx polish_with_feedback(const std::vector<ComplexPoly>& deriv, cx cand, int m0) {
  const int deg = static_cast<int>(deriv.size()) - 1;
  int m = std::clamp(m0, 1, deg);
  for (int round = 0; round < 4; ++round) {
    cand = newton_polish(deriv[static_cast<std::size_t>(m - 1)],
                         deriv[static_cast<std::size_t>(m)], cand, 8);
    const int md = std::clamp(multiplicity_at(deriv[0], cand), 1, deg);
    if (md == m) break;
    m = md;
  }
  return cand;
}

std::vector<ComplexPoly> derivative_chain(const ComplexPoly& p) {
  std::vector<ComplexPoly> deriv{p};
  for (int i = 0; i < p.degree(); ++i) deriv.push_back(deriv.back().derivative());
  return deriv;
}

double cauchy_bound(const ComplexPoly& p) {
  double b = 0;
  for (int i = 0; i < p.degree(); ++i) b = std::max(b, std::abs(p.coeff(i) / p.leading()));
  return b + 1.0;
}

// eigenvalue + clustering pipeline; the fallback when the squarefree
// decomposition cannot be trusted
std::vector<RootMult> roots_by_clustering(const ComplexPoly& p,
                                          const std::vector<ComplexPoly>& deriv) {
  const double bound = cauchy_bound(p) * (1.0 + 1e-6);
  // all roots of p and of its derivatives lie inside the Cauchy disk
  // (Gauss-Lucas), so an iterate outside it is a diverged Newton run
  auto guarded_polish = [&](cx mean, int count) {
    const cx cand = polish_with_feedback(deriv, mean, count);
    return std::abs(cand) <= bound ? cand : mean;
  };
  std::vector<cx> est = companion_eigenvalues(p);
  for (auto& z : est) z = newton_polish(p, deriv[1], z, 3);

  struct Candidate {
    cx root;
    int count;
  };
  std::vector<Candidate> cands;
  for (const auto& coarse : cluster(est, 5e-4)) {
    cx mean(0);
    for (auto i : coarse) mean += est[i];
    mean /= static_cast<double>(coarse.size());
    cands.push_back({guarded_polish(mean, static_cast<int>(coarse.size())),
                     static_cast<int>(coarse.size())});
  }

  // merge representatives that landed on the same point (split eigenvalue
  // clouds of one multiple root), then re-polish at the merged order
  std::vector<cx> reps;
  for (const auto& c : cands) reps.push_back(c.root);
  std::vector<RootMult> out;
  for (const auto& g : cluster(reps, 1e-6)) {
    cx mean(0);
    int count = 0;
    for (auto i : g) {
      mean += cands[i].root * static_cast<double>(cands[i].count);
      count += cands[i].count;
    }
    mean /= static_cast<double>(count);
    out.push_back({guarded_polish(mean, count), count});
  }
  return out;
}

// Squarefree decomposition by the gcd chain: chain_0 = p,
// chain_{i+1} = gcd(chain_i, chain_i'), so chain_i / chain_{i+1} is the
// squarefree product of the roots of multiplicity > i. Every root is then
// found as a simple, well-separated root of some factor, which keeps the
// companion eigenproblem well conditioned even for high orders.
std::vector<RootMult> roots_by_squarefree_chain(const ComplexPoly& p) {
  ComplexPoly cur = (cx(1) / p.leading()) * p;
  std::vector<ComplexPoly> factors; // squarefree levels
  while (cur.degree() >= 1) {
    if (cur.degree() == 1) {
      factors.push_back(cur);
      break;
    }
    ComplexPoly g = poly_gcd(cur, cur.derivative());
    if (g.degree() <= 0) {
      factors.push_back(cur);
      break;
    }
    ComplexPoly s = poly_divmod(cur, g).quotient.trimmed(1e-10);
    if (s.degree() < 1) return {}; // inconsistent chain, let the caller fall back
    factors.push_back(s);
    cur = std::move(g);
  }

  // roots per level (all simple within their factor); anything outside the
  // Cauchy bound of p marks a corrupted factor
  const double cauchy = cauchy_bound(p);
  std::vector<std::vector<cx>> level_roots;
  for (const auto& s : factors) {
    std::vector<cx> rs = companion_eigenvalues(s);
    ComplexPoly ds = s.derivative();
    for (auto& z : rs) {
      z = newton_polish(s, ds, z, 6);
      if (std::abs(z) > cauchy * (1.0 + 1e-6)) return {};
    }
    level_roots.push_back(std::move(rs));
  }

  // multiplicity of a root = number of levels containing it. Positions come
  // from the factors, never from a final polish against p: a squarefree
  // factor conditions the root far better than p itself does near close or
  // multiple roots.
  std::vector<RootMult> out;
  for (cx r0 : level_roots[0]) out.push_back({r0, 1});
  for (std::size_t lvl = 1; lvl < level_roots.size(); ++lvl) {
    for (cx r : level_roots[lvl]) {
      std::size_t best = 0;
      double bd = 1e300;
      for (std::size_t i = 0; i < out.size(); ++i) {
        const double d = std::abs(out[i].root - r);
        if (d < bd) {
          bd = d;
          best = i;
        }
      }
      if (out.empty() || bd > 1e-4) return {}; // level roots must nest
      ++out[best].multiplicity;
      out[best].root = r; // the deeper factor isolates the root best
    }
  }
  return out;
}

// residual of the monic reconstruction from (roots, multiplicities)
double reconstruction_residual(const ComplexPoly& p, const std::vector<RootMult>& roots) {
  int total = 0;
  std::vector<cx> expanded;
  for (const auto& rm : roots) {
    total += rm.multiplicity;
    for (int i = 0; i < rm.multiplicity; ++i) expanded.push_back(rm.root);
  }
  if (total != p.degree()) return 1e300;
  ComplexPoly monic = (cx(1) / p.leading()) * p;
  ComplexPoly rebuilt = ComplexPoly::from_roots(expanded);
  return (monic - rebuilt).coeff_norm_inf() / std::max(1.0, monic.coeff_norm_inf());
}

} // namespace

int multiplicity_at(const ComplexPoly& p, cx z0, double tol_rel) {
  if (p.is_zero()) raise(Errc::zero_polynomial, "multiplicity of the zero polynomial");
  const double zscale = std::max(1.0, std::abs(z0));
  double powz = 1.0;
  for (int d = 0; d < p.degree(); ++d) powz *= zscale;
  ComplexPoly q = p;
  double fact = 1.0;
  for (int m = 0; m <= p.degree(); ++m) {
    double scale = std::max(1e-300, p.coeff_norm_inf() * powz / fact);
    if (std::abs(q(z0)) > tol_rel * scale) return m;
    q = q.derivative();
    fact *= (m + 1);
    if (powz > 1.0) powz /= zscale;
  }
  return p.degree(); // numerically zero everywhere: treat as full order
}

std::vector<RootMult> all_roots(const ComplexPoly& p) {
  if (p.is_zero()) raise(Errc::zero_polynomial, "root finding needs a nonzero polynomial");
  if (p.degree() == 0) return {};

  std::vector<RootMult> primary = roots_by_squarefree_chain(p);
  const double res_primary =
      primary.empty() ? 1e300 : reconstruction_residual(p, primary);
  std::vector<RootMult> out;
  if (res_primary < 1e-6) {
    out = std::move(primary);
  } else {
    std::vector<RootMult> fallback = roots_by_clustering(p, derivative_chain(p));
    if (!primary.empty() &&
        res_primary < reconstruction_residual(p, fallback)) {
      out = std::move(primary);
    } else {
      out = std::move(fallback);
    }
  }

  std::sort(out.begin(), out.end(), [](const RootMult& a, const RootMult& b) {
    if (a.root.real() != b.root.real()) return a.root.real() < b.root.real();
    return a.root.imag() < b.root.imag();
  });
  return out;
}

std::vector<RootMult> roots_in_domain(const ComplexPoly& p, const DiskDomain& d) {
  std::vector<RootMult> out;
  for (const auto& r : all_roots(p))
    if (d.contains(r.root)) out.push_back(r);
  return out;
}

// The public gcd: Euclidean skeleton for the degree structure, then the
// roots of the raw gcd are re-polished against the lower-degree input so
// that the result divides both inputs to the precision the rest of the
// artifact expects.
ComplexPoly poly_gcd(const ComplexPoly& p, const ComplexPoly& q) {
  ComplexPoly d = detail::euclid_gcd(p, q);
  if (d.degree() <= 0) return d;

  const ComplexPoly& target = (!p.is_zero() && (q.is_zero() || p.degree() <= q.degree())) ? p : q;
  const auto deriv = derivative_chain(target);

  std::vector<cx> expanded;
  bool ok = true;
  for (const auto& rm : all_roots(d)) {
    cx r = polish_with_feedback(deriv, rm.root, rm.multiplicity);
    if (std::abs(r - rm.root) > 1e-3) ok = false; // polish ran away
    for (int i = 0; i < rm.multiplicity; ++i) expanded.push_back(r);
  }
  if (!ok || static_cast<int>(expanded.size()) != d.degree()) return d;
  ComplexPoly polished = ComplexPoly::from_roots(expanded);

  // keep the polish only if it actually improved divisibility
  const double scale = std::max({1.0, p.coeff_norm_inf(), q.coeff_norm_inf()});
  auto residual = [&](const ComplexPoly& g) {
    double r = 0;
    if (!p.is_zero()) r = std::max(r, poly_divmod(p, g).remainder.coeff_norm_inf());
    if (!q.is_zero()) r = std::max(r, poly_divmod(q, g).remainder.coeff_norm_inf());
    return r / scale;
  };
  return residual(polished) <= residual(d) ? polished : d;
}

} // namespace harmonia
