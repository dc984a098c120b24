#pragma once

#include <array>
#include <span>
#include <vector>

#include "harmonia/domain.hpp"
#include "harmonia/poly.hpp"
#include "harmonia/surface.hpp"

namespace harmonia {

// Projective hyperplane in P^{n-1}(C), stored as a unit normal under the
// Hermitian pairing <F, a> = sum F_k conj(a_k). Linear forms written as
// a_0 z_0 + ... + a_k z_k (the convention used for file input) are conjugated
// once on construction so a single internal convention holds everywhere.
struct Hyperplane {
  std::vector<cx> normal;

  static Hyperplane from_normal(std::vector<cx> a);      // already Hermitian
  static Hyperplane from_linear_form(std::vector<cx> a); // conjugates
  int ambient() const { return static_cast<int>(normal.size()); }
};

struct Direction {
  std::array<double, 3> d;
  static Direction of(double x, double y, double z);
};

// Components divided by their common polynomial GCD. Throws AllZero.
std::vector<ComplexPoly> reduced_representation(std::span<const ComplexPoly> phi);

// sum conj(a_k) F_k as a polynomial.
ComplexPoly pairing_poly(std::span<const ComplexPoly> F, const Hyperplane& H);

// |<F(z), a>| / ||F(z)||, the Fubini-Study distance. Throws IndeterminatePoint
// when F(z) = 0.
double hyperplane_distance(std::span<const ComplexPoly> F, const Hyperplane& H, cx z);

// True iff <F, a> has no root in the closed domain. Throws DegenerateCurve
// when the pairing vanishes identically.
bool omits_hyperplane(std::span<const ComplexPoly> F, const Hyperplane& H, const DiskDomain& d);

Hyperplane direction_to_hyperplane(const Direction& d);

struct SandwichReport {
  double lower, middle, upper;
  bool holds;
  double max_equality_gap; // |upper - middle| etc., for the K = 1 case
};
// Checks (K^2+1)/(2K^2) |phi.b|^2/|phi|^2 <= (1-|n.b|^2)/2 <= (K^2+1)/2 |phi.b|^2/|phi|^2
SandwichReport angle_sandwich_check(const HarmonicImmersion& s, double K, cx z,
                                    const Direction& b, double tol = 1e-9);

// Every subset of `ambient` normals has |det| > 1e-10 after row normalization.
bool general_position_check(std::span<const Hyperplane> planes, int ambient);

// All coplanar triples (|det| <= 1e-10 on unit vectors); empty means valid.
std::vector<std::array<int, 3>> three_in_plane_check(std::span<const Direction> dirs);

} // namespace harmonia
