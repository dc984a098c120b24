// Micro-benchmark for the batched evaluation kernels: scalar reference vs
// the runtime-selected SIMD backend, on the surface-field reduction that
// dominates grid scans and geodesic edge weighting.

#include <chrono>
#include <cstdio>
#include <vector>

#include "harmonia/fixtures.hpp"
#include "harmonia/kernels.hpp"

using namespace harmonia;
namespace k = harmonia::kernels;
using Clock = std::chrono::steady_clock;

namespace {

double run_one(k::Isa isa, std::span<const ComplexPoly> phi, std::span<const ComplexPoly> dphi,
               const std::vector<double>& zre, const std::vector<double>& zim, int reps) {
  k::force_isa(isa);
  k::SurfaceBatch out;
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    k::surface_batch(phi, dphi, zre, zim, out);
    best = std::min(best, std::chrono::duration<double>(Clock::now() - t0).count());
  }
  // keep the result alive
  volatile double sink = out.phi_norm_sq.back();
  (void)sink;
  return best;
}

} // namespace

int main() {
  Rng rng(42);
  const std::size_t npts = 1 << 18;
  std::vector<double> zre(npts), zim(npts);
  for (std::size_t i = 0; i < npts; ++i) {
    const cx z = rng.complex_in_disk(1.0);
    zre[i] = z.real();
    zim[i] = z.imag();
  }

  std::printf("%-10s %-6s %-8s %12s %10s\n", "kernel", "ncomp", "degree", "time/pt", "speedup");
  for (int ncomp : {3, 6}) {
    for (int deg : {2, 8, 16}) {
      std::vector<ComplexPoly> phi, dphi;
      for (int i = 0; i < ncomp; ++i) {
        std::vector<cx> c(static_cast<std::size_t>(deg) + 1);
        for (auto& v : c) v = rng.complex_in_box(1.0);
        phi.emplace_back(std::move(c));
        dphi.push_back(phi.back().derivative());
      }
      const double ts = run_one(k::Isa::scalar, phi, dphi, zre, zim, 5);
      std::printf("%-10s %-6d %-8d %10.2f ns %10s\n", "scalar", ncomp, deg, 1e9 * ts / npts, "1.00x");
      if (k::host_supports(k::Isa::avx2)) {
        const double tv = run_one(k::Isa::avx2, phi, dphi, zre, zim, 5);
        std::printf("%-10s %-6d %-8d %10.2f ns %9.2fx\n", "avx2", ncomp, deg, 1e9 * tv / npts,
                    ts / tv);
      }
    }
  }
  return 0;
}
