#include <complex>

#include "harmonia/kernels.hpp"

namespace harmonia::kernels::detail {

void poly_eval_scalar(const double* cre, const double* cim, std::size_t nc, const double* zre,
                      const double* zim, std::size_t n, double* ore, double* oim) {
  for (std::size_t i = 0; i < n; ++i) {
    double vr = 0.0, vi = 0.0;
    const double zr = zre[i], zi = zim[i];
    for (std::size_t j = nc; j-- > 0;) {
      const double tr = vr * zr - vi * zi + cre[j];
      const double ti = vr * zi + vi * zr + cim[j];
      vr = tr;
      vi = ti;
    }
    ore[i] = vr;
    oim[i] = vi;
  }
}

void surface_scalar(std::span<const ComplexPoly> phi, std::span<const ComplexPoly> dphi,
                    const double* zre, const double* zim, std::size_t n, SurfaceBatch& out,
                    std::size_t offset) {
  const std::size_t ncomp = phi.size();
  const bool three = ncomp == 3;
  for (std::size_t i = 0; i < n; ++i) {
    const cx z(zre[i], zim[i]);
    double pn = 0, hr = 0, hi = 0, e = 0, f = 0, g = 0, dn = 0, dr = 0, di = 0;
    cx v3[3], d3[3];
    for (std::size_t k = 0; k < ncomp; ++k) {
      const cx v = phi[k](z);
      const cx d = dphi[k](z);
      pn += std::norm(v);
      hr += v.real() * v.real() - v.imag() * v.imag();
      hi += 2.0 * v.real() * v.imag();
      e += 4.0 * v.real() * v.real();
      f += -4.0 * v.real() * v.imag();
      g += 4.0 * v.imag() * v.imag();
      dn += std::norm(d);
      const cx dc = d * std::conj(v);
      dr += dc.real();
      di += dc.imag();
      if (three) {
        v3[k] = v;
        d3[k] = d;
      }
    }
    const std::size_t o = offset + i;
    out.phi_norm_sq[o] = pn;
    out.h_re[o] = hr;
    out.h_im[o] = hi;
    out.e[o] = e;
    out.f[o] = f;
    out.g[o] = g;
    out.dphi_norm_sq[o] = dn;
    out.dot_re[o] = dr;
    out.dot_im[o] = di;
    if (three) {
      // (conj(v) x v) . d
      const cx w0 = std::conj(v3[1]) * v3[2] - std::conj(v3[2]) * v3[1];
      const cx w1 = std::conj(v3[2]) * v3[0] - std::conj(v3[0]) * v3[2];
      const cx w2 = std::conj(v3[0]) * v3[1] - std::conj(v3[1]) * v3[0];
      const cx trip = w0 * d3[0] + w1 * d3[1] + w2 * d3[2];
      out.trip_re[o] = trip.real();
      out.trip_im[o] = trip.imag();
    }
  }
}

} // namespace harmonia::kernels::detail
