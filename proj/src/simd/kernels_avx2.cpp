// AVX2 + FMA kernels, 4 doubles per lane. Compiled with -mavx2 -mfma; only
// reached after the dispatcher has confirmed CPU support.

#include <immintrin.h>

#include "dwho/simd/kernels.hpp"

namespace dwho::simd::detail {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d shuf = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

double weighted_dot_avx2(const double* w, const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256d p0 = _mm256_mul_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(a + i));
    __m256d p1 = _mm256_mul_pd(_mm256_loadu_pd(w + i + 4), _mm256_loadu_pd(a + i + 4));
    acc0 = _mm256_fmadd_pd(p0, _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(p1, _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    __m256d p = _mm256_mul_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(a + i));
    acc0 = _mm256_fmadd_pd(p, _mm256_loadu_pd(b + i), acc0);
  }
  double sum = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) sum += w[i] * a[i] * b[i];
  return sum;
}

void complex_axpy_avx2(double alpha_re, double alpha_im, const double* x, double* re, double* im,
                       std::size_t n) {
  const __m256d ar = _mm256_set1_pd(alpha_re);
  const __m256d ai = _mm256_set1_pd(alpha_im);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d xv = _mm256_loadu_pd(x + i);
    _mm256_storeu_pd(re + i, _mm256_fmadd_pd(ar, xv, _mm256_loadu_pd(re + i)));
    _mm256_storeu_pd(im + i, _mm256_fmadd_pd(ai, xv, _mm256_loadu_pd(im + i)));
  }
  for (; i < n; ++i) {
    re[i] += alpha_re * x[i];
    im[i] += alpha_im * x[i];
  }
}

double weighted_norm2_avx2(const double* w, const double* re, const double* im, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d r = _mm256_loadu_pd(re + i);
    __m256d m = _mm256_loadu_pd(im + i);
    __m256d mag = _mm256_fmadd_pd(r, r, _mm256_mul_pd(m, m));
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), mag, acc);
  }
  double sum = hsum(acc);
  for (; i < n; ++i) sum += w[i] * (re[i] * re[i] + im[i] * im[i]);
  return sum;
}

std::pair<double, double> weighted_cross_avx2(const double* w, const double* re, const double* im,
                                              const double* dre, const double* dim, std::size_t n) {
  __m256d acc_im = _mm256_setzero_pd();
  __m256d acc_re = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d wv = _mm256_loadu_pd(w + i);
    __m256d r = _mm256_loadu_pd(re + i);
    __m256d m = _mm256_loadu_pd(im + i);
    __m256d dr = _mm256_loadu_pd(dre + i);
    __m256d dm = _mm256_loadu_pd(dim + i);
    __m256d cross = _mm256_fmsub_pd(r, dm, _mm256_mul_pd(m, dr));
    __m256d dot = _mm256_fmadd_pd(r, dr, _mm256_mul_pd(m, dm));
    acc_im = _mm256_fmadd_pd(wv, cross, acc_im);
    acc_re = _mm256_fmadd_pd(wv, dot, acc_re);
  }
  double imag = hsum(acc_im);
  double real = hsum(acc_re);
  for (; i < n; ++i) {
    imag += w[i] * (re[i] * dim[i] - im[i] * dre[i]);
    real += w[i] * (re[i] * dre[i] + im[i] * dim[i]);
  }
  return {imag, real};
}

void norm2_avx2(const double* re, const double* im, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d r = _mm256_loadu_pd(re + i);
    __m256d m = _mm256_loadu_pd(im + i);
    _mm256_storeu_pd(out + i, _mm256_fmadd_pd(r, r, _mm256_mul_pd(m, m)));
  }
  for (; i < n; ++i) out[i] = re[i] * re[i] + im[i] * im[i];
}

}  // namespace

const KernelSet& avx2_kernels() {
  static const KernelSet set{"avx2",
                             weighted_dot_avx2,
                             complex_axpy_avx2,
                             weighted_norm2_avx2,
                             weighted_cross_avx2,
                             norm2_avx2};
  return set;
}

}  // namespace dwho::simd::detail
