// NEON kernels for aarch64, 2 doubles per lane.

#include <arm_neon.h>

#include "dwho/simd/kernels.hpp"

namespace dwho::simd::detail {
namespace {

double weighted_dot_neon(const double* w, const double* a, const double* b, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t p = vmulq_f64(vld1q_f64(w + i), vld1q_f64(a + i));
    acc = vfmaq_f64(acc, p, vld1q_f64(b + i));
  }
  double sum = vaddvq_f64(acc);
  for (; i < n; ++i) sum += w[i] * a[i] * b[i];
  return sum;
}

void complex_axpy_neon(double alpha_re, double alpha_im, const double* x, double* re, double* im,
                       std::size_t n) {
  const float64x2_t ar = vdupq_n_f64(alpha_re);
  const float64x2_t ai = vdupq_n_f64(alpha_im);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t xv = vld1q_f64(x + i);
    vst1q_f64(re + i, vfmaq_f64(vld1q_f64(re + i), ar, xv));
    vst1q_f64(im + i, vfmaq_f64(vld1q_f64(im + i), ai, xv));
  }
  for (; i < n; ++i) {
    re[i] += alpha_re * x[i];
    im[i] += alpha_im * x[i];
  }
}

double weighted_norm2_neon(const double* w, const double* re, const double* im, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t r = vld1q_f64(re + i);
    float64x2_t m = vld1q_f64(im + i);
    float64x2_t mag = vfmaq_f64(vmulq_f64(m, m), r, r);
    acc = vfmaq_f64(acc, vld1q_f64(w + i), mag);
  }
  double sum = vaddvq_f64(acc);
  for (; i < n; ++i) sum += w[i] * (re[i] * re[i] + im[i] * im[i]);
  return sum;
}

std::pair<double, double> weighted_cross_neon(const double* w, const double* re, const double* im,
                                              const double* dre, const double* dim, std::size_t n) {
  float64x2_t acc_im = vdupq_n_f64(0.0);
  float64x2_t acc_re = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t wv = vld1q_f64(w + i);
    float64x2_t r = vld1q_f64(re + i);
    float64x2_t m = vld1q_f64(im + i);
    float64x2_t dr = vld1q_f64(dre + i);
    float64x2_t dm = vld1q_f64(dim + i);
    float64x2_t cross = vfmsq_f64(vmulq_f64(r, dm), m, dr);
    float64x2_t dot = vfmaq_f64(vmulq_f64(m, dm), r, dr);
    acc_im = vfmaq_f64(acc_im, wv, cross);
    acc_re = vfmaq_f64(acc_re, wv, dot);
  }
  double imag = vaddvq_f64(acc_im);
  double real = vaddvq_f64(acc_re);
  for (; i < n; ++i) {
    imag += w[i] * (re[i] * dim[i] - im[i] * dre[i]);
    real += w[i] * (re[i] * dre[i] + im[i] * dim[i]);
  }
  return {imag, real};
}

void norm2_neon(const double* re, const double* im, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t r = vld1q_f64(re + i);
    float64x2_t m = vld1q_f64(im + i);
    vst1q_f64(out + i, vfmaq_f64(vmulq_f64(m, m), r, r));
  }
  for (; i < n; ++i) out[i] = re[i] * re[i] + im[i] * im[i];
}

}  // namespace

const KernelSet& neon_kernels() {
  static const KernelSet set{"neon",
                             weighted_dot_neon,
                             complex_axpy_neon,
                             weighted_norm2_neon,
                             weighted_cross_neon,
                             norm2_neon};
  return set;
}

}  // namespace dwho::simd::detail
