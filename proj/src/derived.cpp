#include "harmonia/derived.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>

namespace harmonia {

namespace {

// determinant of a polynomial matrix rows x rows, columns listed in `cols`,
// row r = derivative order r of column function. Subset-DP over columns:
// expanding along the last row, det(S) = sum_c +/- f_c^{(|S|-1)} det(S \ c).
std::vector<ComplexPoly> wronskian_table(const std::vector<std::vector<ComplexPoly>>& derivs) {
  const int m = static_cast<int>(derivs.size());
  std::vector<ComplexPoly> table(1u << m);
  table[0] = ComplexPoly::constant(1.0);
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    const int size = std::popcount(mask);
    ComplexPoly acc;
    int pos = 0; // position of the column within the sorted subset
    for (int c = 0; c < m; ++c) {
      if (!(mask & (1u << c))) continue;
      const ComplexPoly& entry = derivs[static_cast<std::size_t>(c)][static_cast<std::size_t>(size - 1)];
      ComplexPoly term = entry * table[mask & ~(1u << c)];
      // cofactor sign for (row size-1, column pos)
      if (((size - 1) + pos) % 2 != 0) term = cx(-1) * term;
      acc += term;
      ++pos;
    }
    table[mask] = std::move(acc);
  }
  return table;
}

std::vector<std::vector<ComplexPoly>> derivative_rows(std::span<const ComplexPoly> fs,
                                                      int max_order) {
  std::vector<std::vector<ComplexPoly>> d(fs.size());
  for (std::size_t j = 0; j < fs.size(); ++j) {
    d[j].push_back(fs[j]);
    for (int r = 1; r <= max_order; ++r) d[j].push_back(d[j].back().derivative());
  }
  return d;
}

// iterate over all subsets of {0..m-1} with exactly `size` bits
template <typename Fn>
void for_each_subset(int m, int size, Fn&& fn) {
  if (size == 0) {
    fn(0u);
    return;
  }
  std::uint32_t mask = (1u << size) - 1u;
  const std::uint32_t limit = 1u << m;
  while (mask < limit) {
    fn(mask);
    // Gosper's hack
    const std::uint32_t c = mask & (~mask + 1u);
    const std::uint32_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
}

Eigen::MatrixXcd coefficient_matrix(std::span<const ComplexPoly> phi) {
  int maxdeg = 0;
  for (const auto& p : phi) maxdeg = std::max(maxdeg, p.degree());
  Eigen::MatrixXcd M(static_cast<int>(phi.size()), maxdeg + 1);
  for (int r = 0; r < static_cast<int>(phi.size()); ++r)
    for (int c = 0; c <= maxdeg; ++c) M(r, c) = phi[static_cast<std::size_t>(r)].coeff(c);
  return M;
}

} // namespace

ComplexPoly wronskian(std::span<const ComplexPoly> fs) {
  const int m = static_cast<int>(fs.size());
  if (m == 0) return ComplexPoly::constant(1.0);
  auto derivs = derivative_rows(fs, m - 1);
  auto table = wronskian_table(derivs);
  return table[(1u << m) - 1u];
}

int nondegeneracy_rank(std::span<const ComplexPoly> phi) {
  bool any = false;
  for (const auto& p : phi)
    if (!p.is_zero()) any = true;
  if (!any) raise(Errc::all_zero, "rank of the zero curve is undefined");
  Eigen::MatrixXcd M = coefficient_matrix(phi);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-9 * sv(0)) ++rank;
  return rank - 1;
}

CurveReduction reduce_to_nondegenerate(std::span<const ComplexPoly> phi) {
  const int k = nondegeneracy_rank(phi);
  const int r = k + 1;
  CurveReduction red;
  if (r == static_cast<int>(phi.size())) {
    red.selected.resize(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) red.selected[i] = static_cast<int>(i);
    red.curve = reduced_representation(phi);
    red.expansion.assign(phi.size(), std::vector<cx>(phi.size(), cx(0)));
    for (std::size_t i = 0; i < phi.size(); ++i) red.expansion[i][i] = cx(1);
    return red;
  }
  Eigen::MatrixXcd M = coefficient_matrix(phi); // rows = components
  // greedy column reduction in the original order: keep the earliest
  // components that grow the span
  std::vector<int> sel;
  std::vector<Eigen::VectorXcd> basis;
  for (int j = 0; j < static_cast<int>(phi.size()) && static_cast<int>(sel.size()) < r; ++j) {
    Eigen::VectorXcd v = M.row(j).transpose();
    const double norm0 = v.norm();
    if (norm0 < 1e-300) continue;
    for (const auto& b : basis) v -= b.dot(v) * b;
    if (v.norm() > 1e-9 * norm0) {
      sel.push_back(j);
      basis.push_back(v / v.norm());
    }
  }
  if (static_cast<int>(sel.size()) != r)
    raise(Errc::all_zero, "rank and greedy selection disagree; coefficients are ill-conditioned");
  Eigen::MatrixXcd B(M.cols(), r); // basis coefficient vectors as columns
  for (int i = 0; i < r; ++i) B.col(i) = M.row(sel[static_cast<std::size_t>(i)]).transpose();
  red.selected = sel;
  for (int i = 0; i < r; ++i) red.curve.push_back(phi[static_cast<std::size_t>(sel[static_cast<std::size_t>(i)])]);
  red.curve = reduced_representation(red.curve);
  red.expansion.resize(phi.size());
  for (std::size_t j = 0; j < phi.size(); ++j) {
    Eigen::VectorXcd rhs = M.row(static_cast<int>(j)).transpose();
    Eigen::VectorXcd sol = B.colPivHouseholderQr().solve(rhs);
    red.expansion[j].assign(sol.data(), sol.data() + r);
  }
  return red;
}

Hyperplane restrict_hyperplane(const Hyperplane& H, const CurveReduction& red) {
  if (H.ambient() != static_cast<int>(red.expansion.size()))
    raise(Errc::dimension_mismatch, "hyperplane does not match the unreduced curve");
  const int r = red.k() + 1;
  std::vector<cx> a(static_cast<std::size_t>(r), cx(0));
  // <phi, a> = sum_j conj(a_j) phi_j = sum_i conj(atilde_i) psi_i
  for (int i = 0; i < r; ++i) {
    cx acc(0);
    for (std::size_t j = 0; j < red.expansion.size(); ++j)
      acc += std::conj(H.normal[j]) * red.expansion[j][static_cast<std::size_t>(i)];
    a[static_cast<std::size_t>(i)] = std::conj(acc);
  }
  return Hyperplane::from_normal(std::move(a));
}

DerivedCurve::DerivedCurve(std::vector<ComplexPoly> f) : f_(std::move(f)) {
  if (f_.empty()) raise(Errc::all_zero, "empty curve");
  k_ = static_cast<int>(f_.size()) - 1;
  auto derivs = derivative_rows(f_, k_);
  table_ = wronskian_table(derivs);
  scale_ = 1.0;
  for (const auto& p : f_) scale_ = std::max(scale_, p.coeff_norm_inf());
}

void DerivedCurve::check_stage(int s, int max_s) const {
  if (s < 0 || s > max_s) raise(Errc::stage_out_of_range, "derived stage out of range");
}

double DerivedCurve::norm_sq(int s, cx z) const {
  check_stage(s, k_);
  double acc = 0;
  for_each_subset(k_ + 1, s + 1, [&](std::uint32_t mask) { acc += std::norm(table_[mask](z)); });
  return acc;
}

std::vector<ComplexPoly> DerivedCurve::derived_polys(int s) const {
  check_stage(s, k_);
  std::vector<ComplexPoly> out;
  for_each_subset(k_ + 1, s + 1, [&](std::uint32_t mask) { out.push_back(table_[mask]); });
  return out;
}

std::vector<ComplexPoly> DerivedCurve::contracted_polys(int s, const Hyperplane& H) const {
  check_stage(s, k_);
  if (H.ambient() != k_ + 1)
    raise(Errc::dimension_mismatch, "hyperplane does not match the curve's P^k");
  std::vector<ComplexPoly> out;
  for_each_subset(k_ + 1, s, [&](std::uint32_t imask) {
    ComplexPoly acc;
    for (int t = 0; t <= k_; ++t) {
      if (imask & (1u << t)) continue;
      // W(f_t, f_{i_1}, ..., f_{i_s}) = sign * W(sorted), sign from moving
      // column t past the i_j below it
      const int below = std::popcount(imask & ((1u << t) - 1u));
      ComplexPoly term = std::conj(H.normal[static_cast<std::size_t>(t)]) * table_[imask | (1u << t)];
      if (below % 2 != 0) term = cx(-1) * term;
      acc += term;
    }
    out.push_back(std::move(acc));
  });
  return out;
}

double DerivedCurve::contracted_norm_sq(int s, const Hyperplane& H, cx z) const {
  double acc = 0;
  for (const auto& p : contracted_polys(s, H)) acc += std::norm(p(z));
  return acc;
}

double DerivedCurve::phi_s(int s, const Hyperplane& H, cx z) const {
  const double den = norm_sq(s, z);
  if (den < 1e-280) raise(Errc::indeterminate_point, "derived norm vanishes at z");
  return contracted_norm_sq(s, H, z) / den;
}

ComplexPoly DerivedCurve::first_nonzero_contracted(int s, const Hyperplane& H) const {
  for (const auto& p : contracted_polys(s, H)) {
    ComplexPoly t = p.trimmed(1e-12 * std::max(1.0, scale_));
    if (!t.is_zero()) return t;
  }
  raise(Errc::degenerate_curve, "all contracted components vanish identically");
}

ReparamReport wronskian_reparam_check(std::span<const ComplexPoly> fs, cx a, cx b) {
  if (a == cx(0)) raise(Errc::config_invalid, "reparametrization needs a != 0");
  const int s = static_cast<int>(fs.size()) - 1;
  ComplexPoly wz = wronskian(fs);

  // the same functions in the w coordinate: g_j(w) = f_j((w - b)/a)
  std::vector<ComplexPoly> gs;
  gs.reserve(fs.size());
  for (const auto& f : fs) gs.push_back(f.compose_affine(cx(1) / a, -b / a));
  ComplexPoly ww = wronskian(gs);

  cx factor(1);
  for (int i = 0; i < s * (s + 1) / 2; ++i) factor *= a;
  ComplexPoly rhs = factor * ww.compose_affine(a, b);

  ComplexPoly diff = wz - rhs;
  const double scale = std::max({1.0, wz.coeff_norm_inf(), rhs.coeff_norm_inf()});
  ReparamReport rep;
  rep.factor = factor;
  rep.max_coeff_error = diff.coeff_norm_inf() / scale;
  rep.pass = rep.max_coeff_error < 1e-9;
  return rep;
}

LaplacianReport fs_laplacian_identity_check(const DerivedCurve& F, int s, const DiskDomain& d,
                                            double step) {
  if (s < 0 || s >= F.k()) raise(Errc::stage_out_of_range, "identity holds for 0 <= s <= k-1");
  LaplacianReport rep{0.0, 0};
  auto log_norm_sq = [&](cx z) { return std::log(F.norm_sq(s, z)); };
  // coarse subgrid, clear of the boundary so the 5-point stencil stays inside
  const int n = 9;
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix) {
      const cx z = d.center + cx((-0.8 + 1.6 * ix / (n - 1.0)) * d.radius,
                                 (-0.8 + 1.6 * iy / (n - 1.0)) * d.radius);
      const double fs = F.norm_sq(s, z);
      if (fs < 1e-8) continue; // stay away from zeros of ||F~_s||
      const double lap = (log_norm_sq(z + step) + log_norm_sq(z - step) +
                          log_norm_sq(z + cx(0, step)) + log_norm_sq(z - cx(0, step)) -
                          4.0 * log_norm_sq(z)) /
                         (step * step);
      const double lhs = 0.25 * lap;
      const double prev = (s == 0) ? 1.0 : F.norm_sq(s - 1, z);
      const double rhs = prev * F.norm_sq(s + 1, z) / (fs * fs);
      const double rel = std::abs(lhs - rhs) / std::max(1e-300, std::abs(rhs));
      rep.max_rel_error = std::max(rep.max_rel_error, rel);
      ++rep.points;
    }
  return rep;
}

} // namespace harmonia
