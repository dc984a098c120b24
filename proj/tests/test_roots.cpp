#include <doctest.h>

#include "harmonia/roots.hpp"

using namespace harmonia;

TEST_CASE("roots_in_domain examples") {
  DiskDomain unit(cx(0, 0), 1.0, 2);

  // z^2 - 1/4
  {
    auto r = roots_in_domain(ComplexPoly({cx(-0.25), cx(0), cx(1)}), unit);
    REQUIRE(r.size() == 2);
    CHECK(std::abs(r[0].root - cx(-0.5, 0)) < 1e-10);
    CHECK(std::abs(r[1].root - cx(0.5, 0)) < 1e-10);
    CHECK(r[0].multiplicity == 1);
    CHECK(r[1].multiplicity == 1);
  }

  // (z - i/2)^3
  {
    std::vector<cx> roots{cx(0, 0.5), cx(0, 0.5), cx(0, 0.5)};
    auto r = roots_in_domain(ComplexPoly::from_roots(roots), unit);
    REQUIRE(r.size() == 1);
    CHECK(std::abs(r[0].root - cx(0, 0.5)) < 1e-8);
    CHECK(r[0].multiplicity == 3);
  }

  // z^2 + 4: both roots outside the unit disk
  CHECK(roots_in_domain(ComplexPoly({cx(4), cx(0), cx(1)}), unit).empty());

  CHECK_THROWS_AS(roots_in_domain(ComplexPoly{}, unit), Error);
}

TEST_CASE("multiplicity_at derivative test") {
  ComplexPoly p = ComplexPoly::from_roots(std::vector<cx>{cx(0.3, 0.1), cx(0.3, 0.1)});
  CHECK(multiplicity_at(p, cx(0.3, 0.1)) == 2);
  CHECK(multiplicity_at(p, cx(0.9, 0)) == 0);
}

TEST_CASE("closed disk boundary roots are kept") {
  DiskDomain unit(cx(0, 0), 1.0, 2);
  auto r = roots_in_domain(ComplexPoly({cx(-1), cx(1)}), unit); // root exactly at 1
  REQUIRE(r.size() == 1);
  CHECK(std::abs(r[0].root - cx(1, 0)) < 1e-10);
}
