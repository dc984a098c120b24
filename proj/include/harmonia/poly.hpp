#pragma once

#include <complex>
#include <span>
#include <vector>

#include "harmonia/util.hpp"

namespace harmonia {

// Univariate complex polynomial, coefficients ascending in z. Canonical form:
// the highest stored coefficient is nonzero; the zero polynomial stores
// nothing and has degree -1.
class ComplexPoly {
public:
  ComplexPoly() = default;
  explicit ComplexPoly(std::vector<cx> coeffs) : c_(std::move(coeffs)) { trim_exact(); }

  static ComplexPoly constant(cx v) { return ComplexPoly({v}); }
  static ComplexPoly monomial(int degree, cx lead = 1.0);
  static ComplexPoly from_roots(std::span<const cx> roots, cx lead = 1.0);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<cx>& coeffs() const { return c_; }
  cx coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : cx(0); }
  cx leading() const { return c_.empty() ? cx(0) : c_.back(); }

  cx operator()(cx z) const; // Horner

  ComplexPoly derivative() const;
  // Antiderivative with zero constant term.
  ComplexPoly antiderivative() const;
  // p(a*z + b), exact coefficient composition.
  ComplexPoly compose_affine(cx a, cx b) const;

  ComplexPoly& operator+=(const ComplexPoly& o);
  ComplexPoly& operator-=(const ComplexPoly& o);
  friend ComplexPoly operator+(ComplexPoly a, const ComplexPoly& b) { return a += b; }
  friend ComplexPoly operator-(ComplexPoly a, const ComplexPoly& b) { return a -= b; }
  friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b);
  friend ComplexPoly operator*(cx s, ComplexPoly p);

  bool operator==(const ComplexPoly& o) const { return c_ == o.c_; }

  double coeff_norm_inf() const;
  // Drop trailing coefficients with |c| <= tol (absolute).
  ComplexPoly trimmed(double tol) const;

private:
  void trim_exact();
  std::vector<cx> c_;
};

// Quotient/remainder with trailing-noise trim relative to the operand scale.
struct PolyDivision {
  ComplexPoly quotient;
  ComplexPoly remainder;
};
PolyDivision poly_divmod(const ComplexPoly& p, const ComplexPoly& q);

// Monic GCD: Euclidean algorithm (zero tests at relative tolerance 1e-10
// against the remainder scale) with a root-polish pass on top so the result
// divides both inputs to working precision. Throws Errc::both_zero.
ComplexPoly poly_gcd(const ComplexPoly& p, const ComplexPoly& q);

namespace detail {
// the raw Euclidean skeleton, monic, no polish
ComplexPoly euclid_gcd(const ComplexPoly& p, const ComplexPoly& q);
} // namespace detail

// True when |r(z)| is below tol * scale for the polynomial's own scale; used
// to decide "divides exactly" in tests.
bool poly_approx_zero(const ComplexPoly& p, double tol);

} // namespace harmonia
