#include "harmonia/poly.hpp"

#include <algorithm>
#include <cmath>

#include "harmonia/errors.hpp"

namespace harmonia {

void ComplexPoly::trim_exact() {
  while (!c_.empty() && c_.back() == cx(0)) c_.pop_back();
}

ComplexPoly ComplexPoly::monomial(int degree, cx lead) {
  if (degree < 0 || lead == cx(0)) return {};
  std::vector<cx> c(static_cast<std::size_t>(degree) + 1, cx(0));
  c.back() = lead;
  return ComplexPoly(std::move(c));
}

ComplexPoly ComplexPoly::from_roots(std::span<const cx> roots, cx lead) {
  ComplexPoly p = constant(lead);
  for (cx r : roots) p = p * ComplexPoly({-r, cx(1)});
  return p;
}

cx ComplexPoly::operator()(cx z) const {
  cx acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
  return acc;
}

ComplexPoly ComplexPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<cx> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = static_cast<double>(i) * c_[i];
  return ComplexPoly(std::move(d));
}

ComplexPoly ComplexPoly::antiderivative() const {
  if (c_.empty()) return {};
  std::vector<cx> a(c_.size() + 1, cx(0));
  for (std::size_t i = 0; i < c_.size(); ++i) a[i + 1] = c_[i] / static_cast<double>(i + 1);
  return ComplexPoly(std::move(a));
}

ComplexPoly ComplexPoly::compose_affine(cx a, cx b) const {
  ComplexPoly acc;
  ComplexPoly lin({b, a});
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * lin;
    acc += constant(c_[i]);
  }
  return acc;
}

ComplexPoly& ComplexPoly::operator+=(const ComplexPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), cx(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim_exact();
  return *this;
}

ComplexPoly& ComplexPoly::operator-=(const ComplexPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), cx(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim_exact();
  return *this;
}

ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<cx> c(a.c_.size() + b.c_.size() - 1, cx(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return ComplexPoly(std::move(c));
}

ComplexPoly operator*(cx s, ComplexPoly p) {
  if (s == cx(0)) return {};
  for (auto& c : p.c_) c *= s;
  return p;
}

double ComplexPoly::coeff_norm_inf() const {
  double m = 0.0;
  for (const auto& c : c_) m = std::max(m, std::abs(c));
  return m;
}

ComplexPoly ComplexPoly::trimmed(double tol) const {
  std::vector<cx> c = c_;
  while (!c.empty() && std::abs(c.back()) <= tol) c.pop_back();
  return ComplexPoly(std::move(c));
}

PolyDivision poly_divmod(const ComplexPoly& p, const ComplexPoly& q) {
  if (q.is_zero()) raise(Errc::zero_polynomial, "division by the zero polynomial");
  if (p.degree() < q.degree()) return {ComplexPoly{}, p};
  std::vector<cx> rem = p.coeffs();
  std::vector<cx> quo(static_cast<std::size_t>(p.degree() - q.degree()) + 1, cx(0));
  const auto& d = q.coeffs();
  const cx lead = q.leading();
  for (int i = p.degree(); i >= q.degree(); --i) {
    cx f = rem[static_cast<std::size_t>(i)] / lead;
    quo[static_cast<std::size_t>(i - q.degree())] = f;
    if (f == cx(0)) continue;
    for (int j = 0; j <= q.degree(); ++j)
      rem[static_cast<std::size_t>(i - q.degree() + j)] -= f * d[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(std::max(q.degree(), 0)));
  return {ComplexPoly(std::move(quo)), ComplexPoly(std::move(rem))};
}

bool poly_approx_zero(const ComplexPoly& p, double tol) {
  return p.coeff_norm_inf() <= tol;
}

ComplexPoly detail::euclid_gcd(const ComplexPoly& p, const ComplexPoly& q) {
  if (p.is_zero() && q.is_zero()) raise(Errc::both_zero, "gcd(0, 0) is undefined");
  const double scale = std::max({1.0, p.coeff_norm_inf(), q.coeff_norm_inf()});
  ComplexPoly a = p, b = q;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    ComplexPoly r = poly_divmod(a, b).remainder;
    // zero test relative to the remainder chain's scale
    r = r.trimmed(1e-10 * std::max(scale, b.coeff_norm_inf()));
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) raise(Errc::both_zero, "gcd degenerated to zero");
  return (cx(1) / a.leading()) * a;
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::degenerate_point: return "DegeneratePoint";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::zero_polynomial: return "ZeroPolynomial";
    case Errc::both_zero: return "BothZero";
    case Errc::not_quasiconformal: return "NotQuasiconformal";
    case Errc::too_few_planes: return "TooFewPlanes";
    case Errc::not_subgeneral_position: return "NotSubgeneralPosition";
    case Errc::infeasible: return "Infeasible";
    case Errc::stage_out_of_range: return "StageOutOfRange";
    case Errc::indeterminate_point: return "IndeterminatePoint";
    case Errc::degenerate_curve: return "DegenerateCurve";
    case Errc::all_zero: return "AllZero";
    case Errc::hypothesis_failed: return "HypothesisFailed";
    case Errc::config_invalid: return "ConfigInvalid";
    case Errc::precondition_failed: return "PreconditionFailed";
    case Errc::too_few: return "TooFew";
    case Errc::no_witness: return "NoWitness";
    case Errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

} // namespace harmonia
