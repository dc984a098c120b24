#include "harmonia/geodesy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

namespace harmonia {

namespace {

// 16-neighbor stencil: axis, diagonal and knight moves
constexpr int kOffsets[16][2] = {{1, 0},  {-1, 0}, {0, 1},  {0, -1}, {1, 1},  {1, -1},
                                 {-1, 1}, {-1, -1}, {2, 1},  {2, -1}, {-2, 1}, {-2, -1},
                                 {1, 2},  {1, -2}, {-1, 2}, {-1, -2}};

} // namespace

int MetricGraph::node_at(cx z) const {
  const int res = domain.grid_resolution;
  const double step = domain.step();
  const int ix = static_cast<int>(std::lround((z.real() - domain.center.real() + domain.radius) / step));
  const int iy = static_cast<int>(std::lround((z.imag() - domain.center.imag() + domain.radius) / step));
  if (ix < 0 || iy < 0 || ix >= res || iy >= res) return -1;
  return node_of[static_cast<std::size_t>(iy) * res + ix];
}

MetricGraph discretize_metric(const HarmonicImmersion& s, MetricKind kind, int resolution) {
  MetricGraph g;
  g.domain = resolution > 0 ? s.domain().with_resolution(resolution) : s.domain();
  g.kind = kind;
  const int res = g.domain.grid_resolution;
  const double step = g.domain.step();

  g.node_of.assign(static_cast<std::size_t>(res) * res, -1);
  for (int iy = 0; iy < res; ++iy)
    for (int ix = 0; ix < res; ++ix) {
      const cx z = g.domain.grid_point(ix, iy);
      if (!g.domain.in_mask(z)) continue;
      g.node_of[static_cast<std::size_t>(iy) * res + ix] = static_cast<int>(g.nodes.size());
      g.nodes.push_back({z, ix, iy});
    }

  const std::size_t nn = g.nodes.size();
  g.is_boundary.assign(nn, 0);

  // collect edges (undirected, store once per direction later)
  struct RawEdge {
    int a, b;
    cx mid;
    double dx, dy;
  };
  std::vector<RawEdge> edges;
  for (std::size_t i = 0; i < nn; ++i) {
    const auto& n = g.nodes[i];
    for (const auto& o : kOffsets) {
      const int jx = n.ix + o[0], jy = n.iy + o[1];
      int j = -1;
      if (jx >= 0 && jy >= 0 && jx < res && jy < res)
        j = g.node_of[static_cast<std::size_t>(jy) * res + jx];
      if (j < 0) {
        g.is_boundary[i] = 1;
        continue;
      }
      if (j <= static_cast<int>(i)) continue; // one orientation is enough here
      const cx zj = g.nodes[static_cast<std::size_t>(j)].z;
      edges.push_back({static_cast<int>(i), j, 0.5 * (n.z + zj), o[0] * step, o[1] * step});
    }
  }

  // metric weights at the midpoints, batched through the kernels
  std::vector<cx> mids(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) mids[e] = edges[e].mid;
  GridFields f = s.evaluate_at(mids);
  std::vector<double> w(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const MetricSample& m = f.metric[e];
    if (!(m.phi_norm_sq > 0)) raise(Errc::degenerate_point, "phi vanishes at an edge midpoint");
    const double dx = edges[e].dx, dy = edges[e].dy;
    if (kind == MetricKind::induced)
      w[e] = std::sqrt(std::max(0.0, m.e * dx * dx + 2.0 * m.f * dx * dy + m.g * dy * dy));
    else
      w[e] = std::sqrt(2.0 * m.phi_norm_sq) * std::hypot(dx, dy);
  }

  // boundary seeds: metric length of the radial segment out to the mask circle
  g.boundary_seed.assign(nn, 0.0);
  for (std::size_t i = 0; i < nn; ++i) {
    if (!g.is_boundary[i]) continue;
    const cx rel = g.nodes[i].z - g.domain.center;
    const double gap = std::max(0.0, 0.999 * g.domain.radius - std::abs(rel));
    if (gap == 0.0) continue;
    const cx u = rel / std::abs(rel);
    const MetricSample m = s.metric_sample(g.nodes[i].z);
    const double q = kind == MetricKind::induced
                         ? std::sqrt(std::max(0.0, m.e * u.real() * u.real() +
                                                       2.0 * m.f * u.real() * u.imag() +
                                                       m.g * u.imag() * u.imag()))
                         : std::sqrt(2.0 * m.phi_norm_sq);
    g.boundary_seed[i] = q * gap;
  }

  // CSR
  std::vector<std::size_t> degree(nn, 0);
  for (const auto& e : edges) {
    ++degree[static_cast<std::size_t>(e.a)];
    ++degree[static_cast<std::size_t>(e.b)];
  }
  g.adj_offset.assign(nn + 1, 0);
  for (std::size_t i = 0; i < nn; ++i) g.adj_offset[i + 1] = g.adj_offset[i] + degree[i];
  g.adj_node.resize(g.adj_offset.back());
  g.adj_weight.resize(g.adj_offset.back());
  std::vector<std::size_t> cursor(g.adj_offset.begin(), g.adj_offset.end() - 1);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& ed = edges[e];
    g.adj_node[cursor[static_cast<std::size_t>(ed.a)]] = ed.b;
    g.adj_weight[cursor[static_cast<std::size_t>(ed.a)]++] = w[e];
    g.adj_node[cursor[static_cast<std::size_t>(ed.b)]] = ed.a;
    g.adj_weight[cursor[static_cast<std::size_t>(ed.b)]++] = w[e];
  }
  return g;
}

std::vector<double> boundary_distance_field(const MetricGraph& g) {
  const std::size_t nn = g.nodes.size();
  std::vector<double> dist(nn, std::numeric_limits<double>::infinity());
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (std::size_t i = 0; i < nn; ++i)
    if (g.is_boundary[i]) {
      dist[i] = g.boundary_seed.empty() ? 0.0 : g.boundary_seed[i];
      heap.push({dist[i], static_cast<int>(i)});
    }
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[static_cast<std::size_t>(u)]) continue;
    for (std::size_t a = g.adj_offset[static_cast<std::size_t>(u)];
         a < g.adj_offset[static_cast<std::size_t>(u) + 1]; ++a) {
      const int v = g.adj_node[a];
      const double nd = d + g.adj_weight[a];
      if (nd < dist[static_cast<std::size_t>(v)]) {
        dist[static_cast<std::size_t>(v)] = nd;
        heap.push({nd, v});
      }
    }
  }
  return dist;
}

double distance_to_boundary(const MetricGraph& g, const std::vector<double>& field, cx p) {
  const int n = g.node_at(p);
  if (n < 0) raise(Errc::precondition_failed, "point is outside the domain mask");
  return field[static_cast<std::size_t>(n)];
}

double distance_to_boundary(const MetricGraph& g, cx p) {
  return distance_to_boundary(g, boundary_distance_field(g), p);
}

MetricComparisonReport metric_comparison_check(const HarmonicImmersion& s, int resolution,
                                               int sample_points) {
  MetricComparisonReport rep;
  rep.qc = s.qc_constant();
  const double K2 = rep.qc * rep.qc;
  rep.sandwich_lo = 2.0 / (K2 + 1.0);
  rep.sandwich_hi = 2.0 * K2 / (K2 + 1.0);

  GridFields f = s.evaluate_grid();
  const std::size_t stride = std::max<std::size_t>(1, f.points.size() / 512);
  for (std::size_t i = 0; i < f.points.size(); i += stride) {
    if (f.degenerate[i]) continue;
    const MetricSample& m = f.metric[i];
    const double gamma = 2.0 * m.phi_norm_sq;
    for (int a = 0; a < 16; ++a) {
      const double ang = M_PI * a / 16.0;
      const double c = std::cos(ang), sn = std::sin(ang);
      const double q = m.e * c * c + 2.0 * m.f * c * sn + m.g * sn * sn;
      ++rep.direction_checks;
      if (q < rep.sandwich_lo * gamma - 1e-9 * gamma || q > rep.sandwich_hi * gamma + 1e-9 * gamma)
        ++rep.direction_violations;
    }
    // largest eigenvalue of the form vs 4 |phi|^2
    const double mean = 0.5 * (m.e + m.g);
    const double dev = std::hypot(0.5 * (m.e - m.g), m.f);
    rep.max_eigen_excess =
        std::max(rep.max_eigen_excess, (mean + dev) - 4.0 * m.phi_norm_sq);
  }

  // distance consequence d <= sqrt(2) d_Gamma + grid error
  MetricGraph gi = discretize_metric(s, MetricKind::induced, resolution);
  MetricGraph gk = discretize_metric(s, MetricKind::klotz, resolution);
  std::vector<double> di = boundary_distance_field(gi);
  std::vector<double> dk = boundary_distance_field(gk);
  const double step = gi.domain.step();
  rep.worst_distance_slack = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> interior;
  for (std::size_t i = 0; i < gi.nodes.size(); ++i)
    if (!gi.is_boundary[i] && gk.node_at(gi.nodes[i].z) >= 0) interior.push_back(i);
  const std::size_t dstride = std::max<std::size_t>(1, interior.size() / sample_points);
  for (std::size_t s_idx = 0; s_idx < interior.size(); s_idx += dstride) {
    const std::size_t i = interior[s_idx];
    const int j = gk.node_at(gi.nodes[i].z);
    // grid error allowance: stencil overestimate plus a few cells of metric
    const double local = std::sqrt(2.0 * s.metric_sample(gi.nodes[i].z).phi_norm_sq);
    const double err = 0.06 * dk[static_cast<std::size_t>(j)] + 4.0 * step * local;
    ++rep.distance_checks;
    const double slack = std::sqrt(2.0) * dk[static_cast<std::size_t>(j)] + err - di[i];
    rep.worst_distance_slack = std::min(rep.worst_distance_slack, slack);
    if (slack < 0) ++rep.distance_violations;
  }
  return rep;
}

CurvatureScanReport curvature_estimate_scan(const HarmonicImmersion& s,
                                            std::span<const Direction> dirs, int resolution) {
  auto bad = three_in_plane_check(dirs);
  if (!bad.empty()) {
    std::ostringstream msg;
    msg << "directions " << bad[0][0] << ", " << bad[0][1] << ", " << bad[0][2]
        << " lie in a common plane";
    raise(Errc::precondition_failed, msg.str());
  }
  auto reduced = reduced_representation(s.phi());
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    Hyperplane H = direction_to_hyperplane(dirs[i]);
    if (!omits_hyperplane(reduced, H, s.domain())) {
      std::ostringstream msg;
      msg << "direction " << i << " induces a hyperplane met by the Gauss map";
      raise(Errc::precondition_failed, msg.str());
    }
  }

  CurvatureScanReport rep;
  rep.qc = s.qc_constant();
  MetricGraph gi = discretize_metric(s, MetricKind::induced, resolution);
  MetricGraph gk = discretize_metric(s, MetricKind::klotz, resolution);
  std::vector<double> di = boundary_distance_field(gi);
  std::vector<double> dk = boundary_distance_field(gk);

  std::vector<cx> zs(gi.nodes.size());
  for (std::size_t i = 0; i < zs.size(); ++i) zs[i] = gi.nodes[i].z;
  GridFields f = s.evaluate_at(zs);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    if (f.degenerate[i] || gi.is_boundary[i]) continue;
    const double v = std::abs(f.curvature[i].k_induced) * di[i] * di[i];
    if (v > rep.sup_kd2) {
      rep.sup_kd2 = v;
      rep.argmax = zs[i];
    }
    const int j = gk.node_at(zs[i]);
    if (j >= 0)
      rep.sup_kgamma_dgamma2 =
          std::max(rep.sup_kgamma_dgamma2, std::abs(f.curvature[i].k_klotz) *
                                               dk[static_cast<std::size_t>(j)] *
                                               dk[static_cast<std::size_t>(j)]);
    ++rep.points;
  }
  return rep;
}

} // namespace harmonia
