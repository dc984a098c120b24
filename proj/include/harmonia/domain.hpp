#pragma once

#include <vector>

#include "harmonia/errors.hpp"
#include "harmonia/util.hpp"

namespace harmonia {

// Closed disk |z - center| <= radius with a uniform Cartesian sampling grid.
// Grid points are masked to |z - center| <= 0.999 * radius so field
// evaluations stay away from boundary singularities.
struct DiskDomain {
  cx center{0.0, 0.0};
  double radius = 1.0;
  int grid_resolution = 2;

  DiskDomain() = default;
  DiskDomain(cx c, double r, int res) : center(c), radius(r), grid_resolution(res) {
    if (!(radius > 0.0)) raise(Errc::config_invalid, "domain radius must be positive");
    if (grid_resolution < 2) raise(Errc::config_invalid, "grid_resolution must be >= 2");
  }

  double step() const { return 2.0 * radius / (grid_resolution - 1); }

  bool contains(cx z) const { return std::abs(z - center) <= radius * (1.0 + 1e-12); }
  bool in_mask(cx z) const { return std::abs(z - center) <= 0.999 * radius; }

  cx grid_point(int ix, int iy) const {
    return center + cx(-radius + ix * step(), -radius + iy * step());
  }

  struct GridPoint {
    cx z;
    int ix, iy;
  };

  std::vector<GridPoint> grid() const {
    std::vector<GridPoint> pts;
    pts.reserve(static_cast<std::size_t>(grid_resolution) * grid_resolution);
    for (int iy = 0; iy < grid_resolution; ++iy)
      for (int ix = 0; ix < grid_resolution; ++ix) {
        cx z = grid_point(ix, iy);
        if (in_mask(z)) pts.push_back({z, ix, iy});
      }
    return pts;
  }

  // Uniform samples of the boundary circle |z - center| = radius.
  std::vector<cx> boundary_ring(int count) const {
    std::vector<cx> pts;
    pts.reserve(count);
    for (int i = 0; i < count; ++i) {
      double a = 2.0 * M_PI * i / count;
      pts.push_back(center + radius * cx(std::cos(a), std::sin(a)));
    }
    return pts;
  }

  DiskDomain with_resolution(int res) const { return DiskDomain(center, radius, res); }
};

} // namespace harmonia
