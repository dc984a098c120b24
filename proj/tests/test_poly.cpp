#include <doctest.h>

#include "harmonia/poly.hpp"
#include "harmonia/errors.hpp"

using namespace harmonia;

namespace {
bool coeffs_close(const ComplexPoly& p, const std::vector<cx>& want, double tol = 1e-10) {
  if (p.degree() + 1 != static_cast<int>(want.size())) return false;
  for (std::size_t i = 0; i < want.size(); ++i)
    if (std::abs(p.coeff(static_cast<int>(i)) - want[i]) > tol) return false;
  return true;
}
} // namespace

TEST_CASE("poly_eval examples") {
  ComplexPoly p({cx(1, 0), cx(2, 0)}); // 1 + 2z
  CHECK(std::abs(p(cx(0, 1)) - cx(1, 2)) < 1e-15);

  ComplexPoly sq({cx(0, 0), cx(0, 0), cx(1, 0)}); // z^2
  CHECK(std::abs(sq(cx(1, 1)) - cx(0, 2)) < 1e-15);

  ComplexPoly zero;
  CHECK(zero(cx(3, -2)) == cx(0, 0));
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
}

TEST_CASE("poly_derivative examples") {
  CHECK(coeffs_close(ComplexPoly::monomial(3).derivative(), {cx(0), cx(0), cx(3)}));
  CHECK(ComplexPoly::constant(cx(5, 0)).derivative().is_zero());
  CHECK(coeffs_close(ComplexPoly({cx(1), cx(2), cx(1)}).derivative(), {cx(2), cx(2)}));
}

TEST_CASE("canonical form trims exact zeros") {
  ComplexPoly p({cx(1), cx(0), cx(0)});
  CHECK(p.degree() == 0);
  CHECK(p.leading() == cx(1));
}

TEST_CASE("poly_gcd examples") {
  // gcd(z^2 - 1, z - 1) = z - 1
  ComplexPoly a({cx(-1), cx(0), cx(1)});
  ComplexPoly b({cx(-1), cx(1)});
  CHECK(coeffs_close(poly_gcd(a, b), {cx(-1), cx(1)}));

  // gcd(z, z + 1) = 1
  CHECK(poly_gcd(ComplexPoly({cx(0), cx(1)}), ComplexPoly({cx(1), cx(1)})).degree() == 0);

  // gcd((z-i)^2 (z+2), (z-i)(z-3)) = z - i
  // expansions: z^3 + (2-2i) z^2 + (-1-4i) z - 2;  z^2 - (3+i) z + 3i
  ComplexPoly p({cx(-2, 0), cx(-1, -4), cx(2, -2), cx(1, 0)});
  ComplexPoly q({cx(0, 3), cx(-3, -1), cx(1, 0)});
  CHECK(coeffs_close(poly_gcd(p, q), {cx(0, -1), cx(1, 0)}, 1e-9));

  CHECK_THROWS_AS(poly_gcd(ComplexPoly{}, ComplexPoly{}), Error);
}

TEST_CASE("compose_affine and antiderivative") {
  // p(z) = z^2, w = 2z + 1: p(w) = 4z^2 + 4z + 1
  ComplexPoly p = ComplexPoly::monomial(2);
  CHECK(coeffs_close(p.compose_affine(cx(2), cx(1)), {cx(1), cx(4), cx(4)}));
  // antiderivative of 3z^2 is z^3
  CHECK(coeffs_close(ComplexPoly({cx(0), cx(0), cx(3)}).antiderivative(),
                     {cx(0), cx(0), cx(0), cx(1)}));
}

TEST_CASE("from_roots round trip") {
  std::vector<cx> roots{cx(0.5, 0), cx(-0.5, 0)};
  ComplexPoly p = ComplexPoly::from_roots(roots);
  CHECK(coeffs_close(p, {cx(-0.25), cx(0), cx(1)}));
}
