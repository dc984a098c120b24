#include <immintrin.h>

#include "harmonia/kernels.hpp"

// 4 points per iteration, complex values as separate re/im lanes. Tails fall
// back to the scalar kernel so both paths share one set of edge cases.

namespace harmonia::kernels::detail {

namespace {

struct C4 {
  __m256d re, im;
};

inline C4 cmul(C4 a, C4 b) {
  const __m256d rr = _mm256_fmsub_pd(a.re, b.re, _mm256_mul_pd(a.im, b.im));
  const __m256d ii = _mm256_fmadd_pd(a.re, b.im, _mm256_mul_pd(a.im, b.re));
  return {rr, ii};
}

// Horner step: v = v*z + c
inline C4 horner_step(C4 v, C4 z, double cr, double ci) {
  C4 t = cmul(v, z);
  return {_mm256_add_pd(t.re, _mm256_set1_pd(cr)), _mm256_add_pd(t.im, _mm256_set1_pd(ci))};
}

inline C4 horner(const double* cre, const double* cim, std::size_t nc, C4 z) {
  C4 v{_mm256_setzero_pd(), _mm256_setzero_pd()};
  for (std::size_t j = nc; j-- > 0;) v = horner_step(v, z, cre[j], cim[j]);
  return v;
}

} // namespace

void poly_eval_avx2(const double* cre, const double* cim, std::size_t nc, const double* zre,
                    const double* zim, std::size_t n, double* ore, double* oim) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    C4 z{_mm256_loadu_pd(zre + i), _mm256_loadu_pd(zim + i)};
    C4 v = horner(cre, cim, nc, z);
    _mm256_storeu_pd(ore + i, v.re);
    _mm256_storeu_pd(oim + i, v.im);
  }
  if (i < n) poly_eval_scalar(cre, cim, nc, zre + i, zim + i, n - i, ore + i, oim + i);
}

void surface_avx2(std::span<const ComplexPoly> phi, std::span<const ComplexPoly> dphi,
                  const double* zre, const double* zim, std::size_t n, SurfaceBatch& out,
                  std::size_t offset) {
  const std::size_t ncomp = phi.size();
  const bool three = ncomp == 3;

  // coefficient SoA per component
  std::vector<std::vector<double>> pcre(ncomp), pcim(ncomp), dcre(ncomp), dcim(ncomp);
  for (std::size_t k = 0; k < ncomp; ++k) {
    for (const cx& c : phi[k].coeffs()) {
      pcre[k].push_back(c.real());
      pcim[k].push_back(c.imag());
    }
    for (const cx& c : dphi[k].coeffs()) {
      dcre[k].push_back(c.real());
      dcim[k].push_back(c.imag());
    }
  }

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    C4 z{_mm256_loadu_pd(zre + i), _mm256_loadu_pd(zim + i)};
    __m256d pn = _mm256_setzero_pd(), hr = _mm256_setzero_pd(), hi = _mm256_setzero_pd();
    __m256d e = _mm256_setzero_pd(), f = _mm256_setzero_pd(), g = _mm256_setzero_pd();
    __m256d dn = _mm256_setzero_pd(), dr = _mm256_setzero_pd(), di = _mm256_setzero_pd();
    C4 v3[3], d3[3];
    for (std::size_t k = 0; k < ncomp; ++k) {
      const C4 v = horner(pcre[k].data(), pcim[k].data(), pcre[k].size(), z);
      const C4 d = horner(dcre[k].data(), dcim[k].data(), dcre[k].size(), z);
      pn = _mm256_fmadd_pd(v.re, v.re, pn);
      pn = _mm256_fmadd_pd(v.im, v.im, pn);
      hr = _mm256_fmadd_pd(v.re, v.re, hr);
      hr = _mm256_fnmadd_pd(v.im, v.im, hr);
      hi = _mm256_fmadd_pd(_mm256_add_pd(v.re, v.re), v.im, hi);
      const __m256d four = _mm256_set1_pd(4.0);
      e = _mm256_fmadd_pd(_mm256_mul_pd(four, v.re), v.re, e);
      f = _mm256_fnmadd_pd(_mm256_mul_pd(four, v.re), v.im, f);
      g = _mm256_fmadd_pd(_mm256_mul_pd(four, v.im), v.im, g);
      dn = _mm256_fmadd_pd(d.re, d.re, dn);
      dn = _mm256_fmadd_pd(d.im, d.im, dn);
      // d * conj(v)
      dr = _mm256_fmadd_pd(d.re, v.re, dr);
      dr = _mm256_fmadd_pd(d.im, v.im, dr);
      di = _mm256_fmadd_pd(d.im, v.re, di);
      di = _mm256_fnmadd_pd(d.re, v.im, di);
      if (three) {
        v3[k] = v;
        d3[k] = d;
      }
    }
    const std::size_t o = offset + i;
    _mm256_storeu_pd(out.phi_norm_sq.data() + o, pn);
    _mm256_storeu_pd(out.h_re.data() + o, hr);
    _mm256_storeu_pd(out.h_im.data() + o, hi);
    _mm256_storeu_pd(out.e.data() + o, e);
    _mm256_storeu_pd(out.f.data() + o, f);
    _mm256_storeu_pd(out.g.data() + o, g);
    _mm256_storeu_pd(out.dphi_norm_sq.data() + o, dn);
    _mm256_storeu_pd(out.dot_re.data() + o, dr);
    _mm256_storeu_pd(out.dot_im.data() + o, di);
    if (three) {
      auto conj_mul = [](C4 a, C4 b) {
        // conj(a) * b
        const __m256d rr = _mm256_fmadd_pd(a.re, b.re, _mm256_mul_pd(a.im, b.im));
        const __m256d ii = _mm256_fmsub_pd(a.re, b.im, _mm256_mul_pd(a.im, b.re));
        return C4{rr, ii};
      };
      auto sub = [](C4 a, C4 b) {
        return C4{_mm256_sub_pd(a.re, b.re), _mm256_sub_pd(a.im, b.im)};
      };
      const C4 w0 = sub(conj_mul(v3[1], v3[2]), conj_mul(v3[2], v3[1]));
      const C4 w1 = sub(conj_mul(v3[2], v3[0]), conj_mul(v3[0], v3[2]));
      const C4 w2 = sub(conj_mul(v3[0], v3[1]), conj_mul(v3[1], v3[0]));
      C4 trip = cmul(w0, d3[0]);
      C4 t1 = cmul(w1, d3[1]);
      C4 t2 = cmul(w2, d3[2]);
      trip.re = _mm256_add_pd(trip.re, _mm256_add_pd(t1.re, t2.re));
      trip.im = _mm256_add_pd(trip.im, _mm256_add_pd(t1.im, t2.im));
      _mm256_storeu_pd(out.trip_re.data() + o, trip.re);
      _mm256_storeu_pd(out.trip_im.data() + o, trip.im);
    }
  }
  if (i < n) surface_scalar(phi, dphi, zre + i, zim + i, n - i, out, offset + i);
}

} // namespace harmonia::kernels::detail
