#include "harmonia/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "harmonia/errors.hpp"

namespace harmonia::kernels {

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool host_supports(Isa isa) {
  if (isa == Isa::scalar) return true;
#if defined(HARMONIA_COMPILE_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

Isa detect() {
  if (const char* env = std::getenv("HARMONIA_KERNEL")) {
    if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
    if (std::strcmp(env, "avx2") == 0 && host_supports(Isa::avx2)) return Isa::avx2;
  }
  return host_supports(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

Isa g_active = detect();

} // namespace

Isa active_isa() { return g_active; }

void force_isa(Isa isa) {
  if (!host_supports(isa)) raise(Errc::config_invalid, "requested kernel ISA unsupported here");
  g_active = isa;
}

void SurfaceBatch::resize(std::size_t n) {
  for (auto* v : {&phi_norm_sq, &h_re, &h_im, &e, &f, &g, &dphi_norm_sq, &dot_re, &dot_im,
                  &trip_re, &trip_im})
    v->assign(n, 0.0);
}

void poly_eval_batch(std::span<const double> coef_re, std::span<const double> coef_im,
                     std::span<const double> z_re, std::span<const double> z_im,
                     std::span<double> out_re, std::span<double> out_im) {
  const std::size_t n = z_re.size();
#if defined(HARMONIA_COMPILE_AVX2)
  if (g_active == Isa::avx2) {
    detail::poly_eval_avx2(coef_re.data(), coef_im.data(), coef_re.size(), z_re.data(),
                           z_im.data(), n, out_re.data(), out_im.data());
    return;
  }
#endif
  detail::poly_eval_scalar(coef_re.data(), coef_im.data(), coef_re.size(), z_re.data(),
                           z_im.data(), n, out_re.data(), out_im.data());
}

void surface_batch(std::span<const ComplexPoly> phi, std::span<const ComplexPoly> dphi,
                   std::span<const double> z_re, std::span<const double> z_im,
                   SurfaceBatch& out) {
  const std::size_t n = z_re.size();
  out.resize(n);
#if defined(HARMONIA_COMPILE_AVX2)
  if (g_active == Isa::avx2) {
    detail::surface_avx2(phi, dphi, z_re.data(), z_im.data(), n, out, 0);
    return;
  }
#endif
  detail::surface_scalar(phi, dphi, z_re.data(), z_im.data(), n, out, 0);
}

std::vector<cx> eval_many(const ComplexPoly& p, std::span<const cx> zs) {
  const std::size_t n = zs.size();
  std::vector<double> zre(n), zim(n), ore(n), oim(n);
  for (std::size_t i = 0; i < n; ++i) {
    zre[i] = zs[i].real();
    zim[i] = zs[i].imag();
  }
  std::vector<double> cre(p.coeffs().size()), cim(p.coeffs().size());
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    cre[i] = p.coeffs()[i].real();
    cim[i] = p.coeffs()[i].imag();
  }
  poly_eval_batch(cre, cim, zre, zim, ore, oim);
  std::vector<cx> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = cx(ore[i], oim[i]);
  return out;
}

} // namespace harmonia::kernels
