#pragma once

#include <span>
#include <vector>

#include "harmonia/gauss_map.hpp"
#include "harmonia/surface.hpp"

namespace harmonia {

enum class MetricKind { induced, klotz };

// Grid graph over the domain mask with a 16-neighbor stencil. Edge weights
// are the metric length of the straight segment, quadratic form evaluated at
// the segment midpoint (direction-dependent for ds^2, isotropic for the
// Klotz metric).
struct MetricGraph {
  DiskDomain domain;
  MetricKind kind;
  std::vector<int> node_of;              // res*res -> node id or -1
  std::vector<DiskDomain::GridPoint> nodes;
  std::vector<std::uint8_t> is_boundary; // 16-neighborhood exits the mask
  // metric length of the radial gap from a boundary node to the mask circle;
  // seeding with it keeps grid distances converging from above
  std::vector<double> boundary_seed;
  std::vector<std::size_t> adj_offset;   // CSR
  std::vector<int> adj_node;
  std::vector<double> adj_weight;

  int node_at(cx z) const; // nearest grid node; -1 if outside the mask
};

MetricGraph discretize_metric(const HarmonicImmersion& s, MetricKind kind, int resolution = 0);

// Shortest-path distance from every node to the boundary node set
// (multi-source Dijkstra).
std::vector<double> boundary_distance_field(const MetricGraph& g);

// Distance from the grid node nearest to p; computes a fresh field.
double distance_to_boundary(const MetricGraph& g, cx p);
double distance_to_boundary(const MetricGraph& g, const std::vector<double>& field, cx p);

struct MetricComparisonReport {
  double qc = 1.0;
  double sandwich_lo = 0.0, sandwich_hi = 0.0; // 2/(K^2+1), 2K^2/(K^2+1)
  std::size_t direction_checks = 0, direction_violations = 0;
  double max_eigen_excess = 0.0;      // worst violation of ds^2 <= 4|phi|^2 |dz|^2
  std::size_t distance_checks = 0, distance_violations = 0;
  double worst_distance_slack = 0.0;  // min of sqrt(2) d_Gamma + err - d
  bool pass() const { return direction_violations == 0 && distance_violations == 0; }
};
// Quadratic-form sandwich (2/(K^2+1)) Gamma <= ds^2 <= (2K^2/(K^2+1)) Gamma
// over 16 directions per sampled point, the eigenvalue bound
// ds^2 <= 4 |phi|^2 |dz|^2, and the distance consequence
// d(p) <= sqrt(2) d_Gamma(p) + grid error.
MetricComparisonReport metric_comparison_check(const HarmonicImmersion& s, int resolution = 0,
                                               int sample_points = 100);

struct CurvatureScanReport {
  double sup_kd2 = 0.0;        // sup |K_ds2| d^2
  cx argmax{0, 0};
  double sup_kgamma_dgamma2 = 0.0;
  double qc = 1.0;
  std::size_t points = 0;
};
// Empirical curvature-estimate constant. Preconditions: no three directions
// coplanar and all seven induced hyperplanes omitted; violations raise
// PreconditionFailed naming the offender.
CurvatureScanReport curvature_estimate_scan(const HarmonicImmersion& s,
                                            std::span<const Direction> dirs, int resolution = 0);

} // namespace harmonia
