#pragma once

#include <span>
#include <string>
#include <vector>

#include "harmonia/domain.hpp"
#include "harmonia/gauss_map.hpp"
#include "harmonia/poly.hpp"

namespace harmonia {

// Weights for q hyperplanes in n-subgeneral position in P^k. The four defining
// properties:
//   (1) 0 < omega_j * theta <= 1
//   (2) q - 2n + k - 1 = theta (sum omega - k - 1)
//   (3) (n+1)/(k+1) <= theta <= (2n-k+1)/(k+1)
//   (4) sum_{j in B} omega_j <= dim span{a_j : j in B} for all #B <= n+1
struct NochkaWeights {
  std::vector<double> omega;
  double theta = 1.0;
  int n = 0, k = 0, q = 0;
};

// Rank of the normals indexed by `subset` (SVD threshold 1e-9 relative).
int span_dimension(std::span<const Hyperplane> planes, std::span<const int> subset);

// Every n+1 of the normals span C^{k+1}.
bool subgeneral_position(std::span<const Hyperplane> planes, int n);

// Feasibility search over sigma = sum omega: theta(sigma) from property (2),
// an LP in omega at each sigma, post-verified. Throws TooFewPlanes,
// NotSubgeneralPosition, Infeasible.
NochkaWeights compute_nochka_weights(std::span<const Hyperplane> planes, int n);

struct NochkaCheck {
  bool bullet1 = false, bullet2 = false, bullet3 = false, bullet4 = false;
  double bullet2_residual = 0.0;
  std::vector<std::vector<int>> bullet4_violations;
  bool pass() const { return bullet1 && bullet2 && bullet3 && bullet4; }
};
NochkaCheck verify_nochka_properties(const NochkaWeights& w, std::span<const Hyperplane> planes,
                                     double tol = 1e-9);

struct ProductWitness {
  bool found = false;
  std::vector<int> basis_subset; // B1
  double lhs_log = 0.0, rhs_log = 0.0;
};
// Exhaustive search for B1 in B with {a_j}_{j in B1} a basis of span B and
// prod E_j^{omega_j} <= prod_{B1} E_j. Throws NoWitness when none exists.
ProductWitness product_inequality_check(const NochkaWeights& w, std::span<const Hyperplane> planes,
                                        std::span<const double> E, std::span<const int> B);

struct DivisorCheck {
  struct Row {
    cx z0;
    double nu_d;
    double lhs; // nu_D + sum omega min(nu_j, k)
    bool ok;
  };
  std::vector<Row> rows;
  bool pass = true;
  double min_lhs = 0.0;
};
// Weighted divisor inequality at every zero of prod <F, a_j> inside the domain,
// with orders taken exactly from the polynomial factorizations.
DivisorCheck divisor_inequality_check(std::span<const ComplexPoly> F,
                                      std::span<const Hyperplane> planes, const NochkaWeights& w,
                                      const DiskDomain& d);

} // namespace harmonia
