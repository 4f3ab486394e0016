#pragma once

// Data-parallel inner loops used by the grid quadratures and density
// snapshots. Every kernel has a scalar reference implementation; wider
// variants (AVX2+FMA on x86-64, NEON on aarch64) are selected once at
// runtime and must agree with the reference to rounding.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace dwho::simd {

/// Sum of w[i] * a[i] * b[i].
using WeightedDotFn = double (*)(const double* w, const double* a, const double* b, std::size_t n);

/// (re, im) += alpha * x for complex alpha and real x.
using ComplexAxpyFn = void (*)(double alpha_re, double alpha_im, const double* x, double* re,
                               double* im, std::size_t n);

/// Sum of w[i] * (re[i]^2 + im[i]^2).
using WeightedNorm2Fn = double (*)(const double* w, const double* re, const double* im, std::size_t n);

/// Returns {sum w*(re*dim - im*dre), sum w*(re*dre + im*dim)}, i.e. the
/// imaginary and real parts of sum w * conj(f) * g with f = re + i im and
/// g = dre + i dim.
using WeightedCrossFn = std::pair<double, double> (*)(const double* w, const double* re,
                                                      const double* im, const double* dre,
                                                      const double* dim, std::size_t n);

/// out[i] = re[i]^2 + im[i]^2.
using Norm2Fn = void (*)(const double* re, const double* im, double* out, std::size_t n);

struct KernelSet {
  std::string_view name;
  WeightedDotFn weighted_dot;
  ComplexAxpyFn complex_axpy;
  WeightedNorm2Fn weighted_norm2;
  WeightedCrossFn weighted_cross;
  Norm2Fn norm2;
};

const KernelSet& scalar_kernels();

/// Kernel sets this binary was built with and this CPU can run, scalar first.
std::vector<const KernelSet*> available_kernels();

/// The kernel set used by the library. Chosen on first call: the widest
/// supported variant unless the environment variable DWHO_SIMD names one
/// ("scalar", "avx2", "neon").
const KernelSet& active_kernels();

// Span conveniences over the active set. Sizes must match; checked in debug builds.

double weighted_dot(std::span<const double> w, std::span<const double> a, std::span<const double> b);

void complex_axpy(std::complex<double> alpha, std::span<const double> x, std::span<double> re,
                  std::span<double> im);

double weighted_norm2(std::span<const double> w, std::span<const double> re, std::span<const double> im);

std::pair<double, double> weighted_cross(std::span<const double> w, std::span<const double> re,
                                         std::span<const double> im, std::span<const double> dre,
                                         std::span<const double> dim);

void norm2(std::span<const double> re, std::span<const double> im, std::span<double> out);

namespace detail {
#if defined(DWHO_HAVE_AVX2)
const KernelSet& avx2_kernels();
#endif
#if defined(DWHO_HAVE_NEON)
const KernelSet& neon_kernels();
#endif
}  // namespace detail

}  // namespace dwho::simd
