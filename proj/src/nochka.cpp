#include "harmonia/nochka.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "harmonia/derived.hpp"
#include "harmonia/lp.hpp"
#include "harmonia/roots.hpp"

namespace harmonia {

namespace {

template <typename Fn>
void for_each_subset_upto(int q, int max_size, Fn&& fn) {
  std::vector<int> subset;
  std::function<void(int)> rec = [&](int start) {
    if (!subset.empty()) fn(subset);
    if (static_cast<int>(subset.size()) == max_size) return;
    for (int j = start; j < q; ++j) {
      subset.push_back(j);
      rec(j + 1);
      subset.pop_back();
    }
  };
  rec(0);
}

// Subsets whose rank falls short of their size; only these can bind beyond
// the omega_j <= 1 box. Computed once per plane family.
struct SubsetConstraint {
  std::vector<int> subset;
  int rank;
};

std::vector<SubsetConstraint> deficient_subsets(std::span<const Hyperplane> planes, int max_size) {
  std::vector<SubsetConstraint> out;
  const int q = static_cast<int>(planes.size());
  const int kp1 = planes[0].ambient();
  for_each_subset_upto(q, max_size, [&](const std::vector<int>& s) {
    const int size = static_cast<int>(s.size());
    if (size <= 1) return; // unit normals always have rank 1
    int rank;
    if (size > kp1) {
      rank = span_dimension(planes, s); // <= k+1 < size, always a constraint
    } else {
      rank = span_dimension(planes, s);
      if (rank == size) return;
    }
    out.push_back({s, rank});
  });
  return out;
}

} // namespace

int span_dimension(std::span<const Hyperplane> planes, std::span<const int> subset) {
  if (subset.empty()) return 0;
  const int dim = planes[0].ambient();
  Eigen::MatrixXcd M(static_cast<int>(subset.size()), dim);
  for (int r = 0; r < static_cast<int>(subset.size()); ++r)
    for (int c = 0; c < dim; ++c)
      M(r, c) = planes[static_cast<std::size_t>(subset[static_cast<std::size_t>(r)])]
                    .normal[static_cast<std::size_t>(c)];
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-9 * sv(0)) ++rank;
  return rank;
}

bool subgeneral_position(std::span<const Hyperplane> planes, int n) {
  const int q = static_cast<int>(planes.size());
  const int kp1 = planes[0].ambient();
  if (q < n + 1) return false;
  std::vector<int> c(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (span_dimension(planes, c) < kp1) return false;
    int i = n;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == q - (n + 1) + i) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j <= n; ++j)
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return true;
}

namespace {

// LP at fixed sigma: maximize t subject to
//   t <= omega_j, omega_j <= 1/theta(sigma), sum omega = sigma,
//   sum_{j in B} omega_j <= rank(B) for the deficient subsets.
// Usable when the optimum has t > 0 (strict positivity of the weights).
std::vector<double> try_sigma(const std::vector<SubsetConstraint>& constraints, int q,
                              double sigma, double theta) {
  std::vector<double> c(static_cast<std::size_t>(q) + 1, 0.0);
  c.back() = 1.0;
  std::vector<std::vector<double>> A;
  std::vector<double> b;
  auto row = [&](std::vector<double> r, double rhs) {
    A.push_back(std::move(r));
    b.push_back(rhs);
  };
  for (int j = 0; j < q; ++j) { // t - omega_j <= 0
    std::vector<double> r(static_cast<std::size_t>(q) + 1, 0.0);
    r[static_cast<std::size_t>(j)] = -1.0;
    r.back() = 1.0;
    row(std::move(r), 0.0);
  }
  for (int j = 0; j < q; ++j) { // omega_j <= 1/theta
    std::vector<double> r(static_cast<std::size_t>(q) + 1, 0.0);
    r[static_cast<std::size_t>(j)] = 1.0;
    row(std::move(r), 1.0 / theta);
  }
  { // sum omega = sigma
    std::vector<double> r(static_cast<std::size_t>(q) + 1, 0.0);
    for (int j = 0; j < q; ++j) r[static_cast<std::size_t>(j)] = 1.0;
    row(r, sigma);
    for (auto& v : r) v = -v;
    row(std::move(r), -sigma);
  }
  for (const auto& sc : constraints) {
    std::vector<double> r(static_cast<std::size_t>(q) + 1, 0.0);
    for (int j : sc.subset) r[static_cast<std::size_t>(j)] = 1.0;
    row(std::move(r), static_cast<double>(sc.rank));
  }

  LpResult lp = lp_solve(c, A, b);
  if (!lp.feasible || !lp.bounded || lp.objective <= 1e-10) return {};
  return {lp.x.begin(), lp.x.begin() + q};
}

} // namespace

NochkaWeights compute_nochka_weights(std::span<const Hyperplane> planes, int n) {
  const int q = static_cast<int>(planes.size());
  if (q == 0) raise(Errc::too_few_planes, "no hyperplanes");
  const int k = planes[0].ambient() - 1;
  for (const auto& h : planes)
    if (h.ambient() != k + 1) raise(Errc::dimension_mismatch, "mixed hyperplane dimensions");
  if (n < k) raise(Errc::config_invalid, "subgeneral position needs n >= k");
  if (q <= 2 * n - k + 1) raise(Errc::too_few_planes, "need q > 2n - k + 1");
  if (!subgeneral_position(planes, n))
    raise(Errc::not_subgeneral_position, "some n+1 normals do not span C^{k+1}");

  const auto constraints = deficient_subsets(planes, n + 1);

  // property (3) window translated to sigma = sum omega via property (2)
  const double excess = q - 2.0 * n + k - 1.0; // > 0 here
  const double sigma_lo = (k + 1.0) + excess * (k + 1.0) / (2.0 * n - k + 1.0);
  const double sigma_hi = (k + 1.0) + excess * (k + 1.0) / (n + 1.0);
  auto theta_of = [&](double sigma) { return excess / (sigma - k - 1.0); };

  auto attempt = [&](double sigma) -> NochkaWeights {
    std::vector<double> omega = try_sigma(constraints, q, sigma, theta_of(sigma));
    if (omega.empty()) return {};
    NochkaWeights w;
    w.omega = std::move(omega);
    // polish: property (2) holds exactly for the sigma the LP realized
    double actual = 0;
    for (double o : w.omega) actual += o;
    w.theta = theta_of(actual);
    w.n = n;
    w.k = k;
    w.q = q;
    return w;
  };

  const int steps = 1000;
  const double h = (sigma_hi - sigma_lo) / steps;
  for (int pass = 0; pass < 2; ++pass) {
    const double offset = pass == 0 ? 0.0 : 0.5 * h; // refinement grid
    for (int i = 0; i <= steps; ++i) {
      const double sigma = std::min(sigma_hi, sigma_lo + offset + i * h);
      NochkaWeights w = attempt(sigma);
      if (!w.omega.empty() && verify_nochka_properties(w, planes).pass()) return w;
      if (h == 0.0) break;
    }
    if (h == 0.0) break;
  }
  raise(Errc::infeasible, "no feasible Nochka weights found in the theta window");
}

NochkaCheck verify_nochka_properties(const NochkaWeights& w, std::span<const Hyperplane> planes,
                                     double tol) {
  NochkaCheck c;
  const int q = w.q;
  c.bullet1 = static_cast<int>(w.omega.size()) == q;
  for (double o : w.omega)
    if (!(o > 0.0) || o * w.theta > 1.0 + tol) c.bullet1 = false;

  double sigma = 0;
  for (double o : w.omega) sigma += o;
  c.bullet2_residual = std::abs((q - 2.0 * w.n + w.k - 1.0) - w.theta * (sigma - w.k - 1.0));
  c.bullet2 = c.bullet2_residual <= tol * std::max(1.0, std::abs(sigma));

  const double lo = (w.n + 1.0) / (w.k + 1.0), hi = (2.0 * w.n - w.k + 1.0) / (w.k + 1.0);
  c.bullet3 = w.theta >= lo - tol && w.theta <= hi + tol;

  c.bullet4 = true;
  for_each_subset_upto(q, w.n + 1, [&](const std::vector<int>& s) {
    double sum = 0;
    for (int j : s) sum += w.omega[static_cast<std::size_t>(j)];
    if (sum <= 1.0 + tol) return; // rank is at least 1
    const int rank = span_dimension(planes, s);
    if (sum > rank + tol) {
      c.bullet4 = false;
      c.bullet4_violations.push_back(s);
    }
  });
  return c;
}

ProductWitness product_inequality_check(const NochkaWeights& w, std::span<const Hyperplane> planes,
                                        std::span<const double> E, std::span<const int> B) {
  if (B.empty() || static_cast<int>(B.size()) > w.n + 1)
    raise(Errc::config_invalid, "need 0 < #B <= n+1");
  for (double e : E)
    if (!(e > 1.0)) raise(Errc::config_invalid, "all E_j must exceed 1");

  double lhs = 0;
  for (int j : B)
    lhs += w.omega[static_cast<std::size_t>(j)] * std::log(E[static_cast<std::size_t>(j)]);

  std::vector<int> Bvec(B.begin(), B.end());
  const int dim = span_dimension(planes, Bvec);

  ProductWitness best;
  const int nb = static_cast<int>(B.size());
  std::vector<int> choice(static_cast<std::size_t>(dim));
  std::function<void(int, int)> rec = [&](int start, int picked) {
    if (best.found) return;
    if (picked == dim) {
      std::vector<int> sub;
      for (int i = 0; i < dim; ++i)
        sub.push_back(B[static_cast<std::size_t>(choice[static_cast<std::size_t>(i)])]);
      if (span_dimension(planes, sub) != dim) return;
      double rhs = 0;
      for (int j : sub) rhs += std::log(E[static_cast<std::size_t>(j)]);
      if (lhs <= rhs + 1e-10) {
        best.found = true;
        best.basis_subset = sub;
        best.lhs_log = lhs;
        best.rhs_log = rhs;
      }
      return;
    }
    for (int i = start; i < nb; ++i) {
      choice[static_cast<std::size_t>(picked)] = i;
      rec(i + 1, picked + 1);
    }
  };
  rec(0, 0);
  if (!best.found) raise(Errc::no_witness, "no spanning subset satisfies the product inequality");
  return best;
}

DivisorCheck divisor_inequality_check(std::span<const ComplexPoly> F,
                                      std::span<const Hyperplane> planes, const NochkaWeights& w,
                                      const DiskDomain& d) {
  const int k = static_cast<int>(F.size()) - 1;
  std::vector<ComplexPoly> fvec(F.begin(), F.end());
  ComplexPoly W = wronskian(fvec);
  double scale = 1.0;
  for (const auto& f : F) scale = std::max(scale, f.coeff_norm_inf());
  W = W.trimmed(1e-12 * scale);
  if (W.is_zero()) raise(Errc::degenerate_curve, "Wronskian vanishes identically");

  std::vector<ComplexPoly> pairings;
  for (const auto& H : planes) {
    ComplexPoly p = pairing_poly(F, H).trimmed(1e-13 * scale);
    if (p.is_zero()) raise(Errc::degenerate_curve, "<F, a_j> vanishes identically");
    pairings.push_back(std::move(p));
  }

  std::vector<cx> distinct;
  for (const auto& p : pairings) {
    if (p.degree() <= 0) continue;
    for (const auto& r : roots_in_domain(p, d)) {
      bool found = false;
      for (cx u : distinct)
        if (std::abs(u - r.root) < 1e-6) found = true;
      if (!found) distinct.push_back(r.root);
    }
  }

  DivisorCheck out;
  out.min_lhs = std::numeric_limits<double>::infinity();
  for (cx z0 : distinct) {
    const int nu_w = multiplicity_at(W, z0);
    double nu_d = nu_w;
    double weighted_min = 0;
    for (std::size_t j = 0; j < pairings.size(); ++j) {
      const int nu = multiplicity_at(pairings[j], z0);
      nu_d -= w.omega[j] * nu;
      weighted_min += w.omega[j] * std::min(nu, k);
    }
    DivisorCheck::Row row;
    row.z0 = z0;
    row.nu_d = nu_d;
    row.lhs = nu_d + weighted_min;
    row.ok = row.lhs >= -1e-9;
    if (!row.ok) out.pass = false;
    out.min_lhs = std::min(out.min_lhs, row.lhs);
    out.rows.push_back(row);
  }
  if (out.rows.empty()) out.min_lhs = 0.0;
  return out;
}

} // namespace harmonia
