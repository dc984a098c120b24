#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "harmonia/domain.hpp"
#include "harmonia/gauss_map.hpp"
#include "harmonia/poly.hpp"

namespace harmonia {

// Wronskian of the functions in the given order: det of the matrix whose
// r-th row holds the r-th derivatives. Exact coefficient arithmetic.
ComplexPoly wronskian(std::span<const ComplexPoly> fs);

// k such that the coefficient matrix (rows = components) has rank k+1;
// the curve spans exactly a k-plane of projective space. Throws AllZero.
int nondegeneracy_rank(std::span<const ComplexPoly> phi);

// Reduction of an arbitrary tuple to a linearly nondegenerate curve in P^k:
// a maximal linearly independent subfamily (column reduction of the
// coefficient matrix) plus the expansion of every original component in that
// subfamily, which is what hyperplane restriction needs.
struct CurveReduction {
  std::vector<ComplexPoly> curve;         // k+1 components, reduced representation
  std::vector<int> selected;              // indices of the chosen subfamily
  std::vector<std::vector<cx>> expansion; // phi[j] = sum_i expansion[j][i] * curve[i]
  int k() const { return static_cast<int>(curve.size()) - 1; }
};
CurveReduction reduce_to_nondegenerate(std::span<const ComplexPoly> phi);

// Pullback of a hyperplane of the ambient space to the reduced curve's P^k,
// renormalized to a unit normal.
Hyperplane restrict_hyperplane(const Hyperplane& H, const CurveReduction& red);

// All Wronskian data of a reduced nondegenerate curve F = (f_0, ..., f_k).
// The table holds W over every subset of components (sorted order); derived
// norms and the contracted norms evaluate from it.
class DerivedCurve {
public:
  explicit DerivedCurve(std::vector<ComplexPoly> f);

  int k() const { return k_; }
  const std::vector<ComplexPoly>& components() const { return f_; }

  // Wronskian of the sorted tuple encoded by the bitmask over components.
  const ComplexPoly& wronskian_of(std::uint32_t mask) const { return table_[mask]; }
  const ComplexPoly& top_wronskian() const { return table_[(1u << (k_ + 1)) - 1u]; }

  // ||F~_s(z)||^2 = sum over (s+1)-subsets of |W|^2
  double norm_sq(int s, cx z) const;
  // ||F_s(H)(z)||^2, the hyperplane-contracted norm
  double contracted_norm_sq(int s, const Hyperplane& H, cx z) const;
  // contracted/derived ratio in [0, 1]; throws IndeterminatePoint when the
  // derived norm vanishes at z
  double phi_s(int s, const Hyperplane& H, cx z) const;

  // Contracted component polynomials: one per s-subset (i_1 < ... < i_s),
  // xi_I = sum_{t not in I} conj(a_t) W(f_t, f_{i_1}, ..., f_{i_s}).
  std::vector<ComplexPoly> contracted_polys(int s, const Hyperplane& H) const;
  // Wronskian polynomials of all (s+1)-subsets.
  std::vector<ComplexPoly> derived_polys(int s) const;
  // First contracted component that does not vanish identically.
  ComplexPoly first_nonzero_contracted(int s, const Hyperplane& H) const;

private:
  void check_stage(int s, int max_s) const;
  std::vector<ComplexPoly> f_;
  int k_;
  std::vector<ComplexPoly> table_; // indexed by subset mask
  double scale_;
};

struct ReparamReport {
  bool pass;
  double max_coeff_error; // relative
  cx factor;              // a^{s(s+1)/2}
};
// Checks W_z(f) == W_w(f o w^{-1}) composed with w, times (dw/dz)^{s(s+1)/2},
// for the affine reparametrization w = a z + b.
ReparamReport wronskian_reparam_check(std::span<const ComplexPoly> fs, cx a, cx b);

struct LaplacianReport {
  double max_rel_error;
  std::size_t points = 0;
  bool pass(double tol) const { return points > 0 && max_rel_error < tol; }
};
// Finite-difference (1/4) Lap log ||F~_s||^2 against
// ||F~_{s-1}||^2 ||F~_{s+1}||^2 / ||F~_s||^4 (F~_{-1} = 1), sampled on a
// coarse subgrid away from zeros of ||F~_s||.
LaplacianReport fs_laplacian_identity_check(const DerivedCurve& F, int s, const DiskDomain& d,
                                            double step = 1e-3);

} // namespace harmonia
