#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "harmonia/poly.hpp"

namespace harmonia::kernels {

// Batched inner loops for grid evaluation. Scalar kernels are the reference
// semantics; the AVX2 variants are selected at runtime (cpu detection, or
// HARMONIA_KERNEL=scalar|avx2 to force) and are equivalence-tested against
// the scalar path. All batch layouts are structure-of-arrays.

enum class Isa { scalar, avx2 };

const char* isa_name(Isa isa);
Isa active_isa();     // cached detection + env override
void force_isa(Isa);  // for tests; throws if unsupported on this host
bool host_supports(Isa isa);

// out[i] = p(z_i) with p given by ascending coefficient arrays.
void poly_eval_batch(std::span<const double> coef_re, std::span<const double> coef_im,
                     std::span<const double> z_re, std::span<const double> z_im,
                     std::span<double> out_re, std::span<double> out_im);

// Per-point reductions over the components of a harmonic immersion.
// For point i, with v_k = phi_k(z_i) and d_k = phi_k'(z_i):
//   phi_norm_sq = sum |v_k|^2          h  = sum v_k^2
//   e = sum (2 Re v_k)^2               f  = sum -(2 Re v_k)(2 Im v_k)
//   g = sum (2 Im v_k)^2
//   dphi_norm_sq = sum |d_k|^2         dot = sum d_k * conj(v_k)
//   trip = (conj(v) x v) . d           (three components only, else 0)
struct SurfaceBatch {
  std::vector<double> phi_norm_sq, h_re, h_im;
  std::vector<double> e, f, g;
  std::vector<double> dphi_norm_sq, dot_re, dot_im;
  std::vector<double> trip_re, trip_im;
  void resize(std::size_t n);
};

void surface_batch(std::span<const ComplexPoly> phi, std::span<const ComplexPoly> dphi,
                   std::span<const double> z_re, std::span<const double> z_im,
                   SurfaceBatch& out);

// Convenience: evaluate one polynomial at a vector of complex points.
std::vector<cx> eval_many(const ComplexPoly& p, std::span<const cx> zs);

namespace detail {
void poly_eval_scalar(const double* cre, const double* cim, std::size_t nc, const double* zre,
                      const double* zim, std::size_t n, double* ore, double* oim);
void surface_scalar(std::span<const ComplexPoly> phi, std::span<const ComplexPoly> dphi,
                    const double* zre, const double* zim, std::size_t n, SurfaceBatch& out,
                    std::size_t offset);
#if defined(HARMONIA_COMPILE_AVX2)
void poly_eval_avx2(const double* cre, const double* cim, std::size_t nc, const double* zre,
                    const double* zim, std::size_t n, double* ore, double* oim);
void surface_avx2(std::span<const ComplexPoly> phi, std::span<const ComplexPoly> dphi,
                  const double* zre, const double* zim, std::size_t n, SurfaceBatch& out,
                  std::size_t offset);
#endif
} // namespace detail

} // namespace harmonia::kernels
