#pragma once

#include <vector>

#include "harmonia/domain.hpp"
#include "harmonia/poly.hpp"

namespace harmonia {

struct RootMult {
  cx root;
  int multiplicity;
};

// All roots of p in the plane, with multiplicities. Companion-matrix
// eigenvalues, Newton polish, clustering at 1e-6, then a multiplicity-aware
// refinement pass (Newton on p^(m-1)) so multiple roots land within 1e-8.
// Throws Errc::zero_polynomial.
std::vector<RootMult> all_roots(const ComplexPoly& p);

// Roots inside the closed disk of d (the grid mask is not applied here).
std::vector<RootMult> roots_in_domain(const ComplexPoly& p, const DiskDomain& d);

// Order of vanishing of p at z0 by the derivative test: smallest m with
// |p^(m)(z0)| above tol relative to the coefficient scale.
int multiplicity_at(const ComplexPoly& p, cx z0, double tol_rel = 1e-7);

} // namespace harmonia
