// Scalar reference kernels. These define the results the vector variants
// are tested against.

#include "dwho/simd/kernels.hpp"

namespace dwho::simd {
namespace {

double weighted_dot_scalar(const double* w, const double* a, const double* b, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += w[i] * a[i] * b[i];
  return sum;
}

void complex_axpy_scalar(double alpha_re, double alpha_im, const double* x, double* re, double* im,
                         std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    re[i] += alpha_re * x[i];
    im[i] += alpha_im * x[i];
  }
}

double weighted_norm2_scalar(const double* w, const double* re, const double* im, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += w[i] * (re[i] * re[i] + im[i] * im[i]);
  return sum;
}

std::pair<double, double> weighted_cross_scalar(const double* w, const double* re, const double* im,
                                                const double* dre, const double* dim, std::size_t n) {
  double imag = 0.0;
  double real = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    imag += w[i] * (re[i] * dim[i] - im[i] * dre[i]);
    real += w[i] * (re[i] * dre[i] + im[i] * dim[i]);
  }
  return {imag, real};
}

void norm2_scalar(const double* re, const double* im, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = re[i] * re[i] + im[i] * im[i];
}

}  // namespace

const KernelSet& scalar_kernels() {
  static const KernelSet set{"scalar",
                             weighted_dot_scalar,
                             complex_axpy_scalar,
                             weighted_norm2_scalar,
                             weighted_cross_scalar,
                             norm2_scalar};
  return set;
}

}  // namespace dwho::simd
