#include <doctest.h>

#include "harmonia/fixtures.hpp"
#include "harmonia/kernels.hpp"

using namespace harmonia;
namespace k = harmonia::kernels;

namespace {

struct IsaGuard {
  k::Isa saved = k::active_isa();
  ~IsaGuard() { k::force_isa(saved); }
};

void run_surface(k::Isa isa, std::span<const ComplexPoly> phi, std::span<const ComplexPoly> dphi,
                 const std::vector<cx>& zs, k::SurfaceBatch& out) {
  IsaGuard guard;
  k::force_isa(isa);
  std::vector<double> zre(zs.size()), zim(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i) {
    zre[i] = zs[i].real();
    zim[i] = zs[i].imag();
  }
  k::surface_batch(phi, dphi, zre, zim, out);
}

} // namespace

TEST_CASE("poly_eval_batch matches direct Horner on both ISAs") {
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    ComplexPoly p = fixtures::random_poly(rng, rng.uniform_int(0, 12));
    const std::size_t n = 37; // odd: exercises the SIMD tail
    std::vector<cx> zs(n);
    for (auto& z : zs) z = rng.complex_in_box(1.5);

    for (k::Isa isa : {k::Isa::scalar, k::Isa::avx2}) {
      if (!k::host_supports(isa)) continue;
      IsaGuard guard;
      k::force_isa(isa);
      auto vals = k::eval_many(p, zs);
      for (std::size_t i = 0; i < n; ++i) {
        const cx want = p(zs[i]);
        CHECK(std::abs(vals[i] - want) <= 1e-12 * std::max(1.0, std::abs(want)));
      }
    }
  }
}

TEST_CASE("surface_batch: AVX2 and scalar agree") {
  if (!k::host_supports(k::Isa::avx2)) {
    MESSAGE("AVX2 unavailable, equivalence test skipped");
    return;
  }
  Rng rng(11);
  for (int ncomp : {3, 5}) {
    auto phi = fixtures::random_phi(rng, ncomp, 7);
    std::vector<ComplexPoly> dphi;
    for (const auto& p : phi) dphi.push_back(p.derivative());
    std::vector<cx> zs(101);
    for (auto& z : zs) z = rng.complex_in_box(1.2);

    k::SurfaceBatch a, b;
    run_surface(k::Isa::scalar, phi, dphi, zs, a);
    run_surface(k::Isa::avx2, phi, dphi, zs, b);

    auto close = [](const std::vector<double>& x, const std::vector<double>& y) {
      double worst = 0;
      for (std::size_t i = 0; i < x.size(); ++i)
        worst = std::max(worst, std::abs(x[i] - y[i]) /
                                    std::max({1.0, std::abs(x[i]), std::abs(y[i])}));
      return worst;
    };
    CHECK(close(a.phi_norm_sq, b.phi_norm_sq) < 1e-12);
    CHECK(close(a.h_re, b.h_re) < 1e-12);
    CHECK(close(a.h_im, b.h_im) < 1e-12);
    CHECK(close(a.e, b.e) < 1e-12);
    CHECK(close(a.f, b.f) < 1e-12);
    CHECK(close(a.g, b.g) < 1e-12);
    CHECK(close(a.dphi_norm_sq, b.dphi_norm_sq) < 1e-12);
    CHECK(close(a.dot_re, b.dot_re) < 1e-12);
    CHECK(close(a.dot_im, b.dot_im) < 1e-12);
    CHECK(close(a.trip_re, b.trip_re) < 1e-12);
    CHECK(close(a.trip_im, b.trip_im) < 1e-12);
  }
}

TEST_CASE("surface_batch reductions match the definitions") {
  Rng rng(13);
  auto phi = fixtures::random_phi(rng, 3, 5);
  std::vector<ComplexPoly> dphi;
  for (const auto& p : phi) dphi.push_back(p.derivative());
  std::vector<cx> zs{cx(0.3, -0.2)};
  k::SurfaceBatch b;
  run_surface(k::active_isa(), phi, dphi, zs, b);

  const cx z = zs[0];
  double pn = 0, e = 0, f = 0, g = 0;
  cx h(0), dot(0);
  for (const auto& p : phi) {
    const cx v = p(z);
    pn += std::norm(v);
    h += v * v;
    e += 4 * v.real() * v.real();
    f += -4 * v.real() * v.imag();
    g += 4 * v.imag() * v.imag();
  }
  for (std::size_t i = 0; i < 3; ++i) dot += dphi[i](z) * std::conj(phi[i](z));
  CHECK(b.phi_norm_sq[0] == doctest::Approx(pn).epsilon(1e-12));
  CHECK(b.h_re[0] == doctest::Approx(h.real()).epsilon(1e-12));
  CHECK(b.h_im[0] == doctest::Approx(h.imag()).epsilon(1e-12));
  CHECK(b.e[0] == doctest::Approx(e).epsilon(1e-12));
  CHECK(b.f[0] == doctest::Approx(f).epsilon(1e-12));
  CHECK(b.g[0] == doctest::Approx(g).epsilon(1e-12));
  CHECK(b.dot_re[0] == doctest::Approx(dot.real()).epsilon(1e-12));
  CHECK(b.dot_im[0] == doctest::Approx(dot.imag()).epsilon(1e-12));
}
