#include "bnsum/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define BNSUM_HAVE_AVX2 1
#endif

namespace bnsum::kernels::avx2 {

#if BNSUM_HAVE_AVX2

bool compiled() { return true; }

namespace {

__attribute__((target("avx2,fma"))) double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

__attribute__((target("avx2,fma"))) DotResult weighted_dot(const double* w, const double* x,
                                                            const double* y, std::size_t n) {
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  __m256d abs0 = _mm256_setzero_pd();
  __m256d abs1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d t0 = _mm256_mul_pd(_mm256_mul_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(x + i)),
                                     _mm256_loadu_pd(y + i));
    const __m256d t1 =
        _mm256_mul_pd(_mm256_mul_pd(_mm256_loadu_pd(w + i + 4), _mm256_loadu_pd(x + i + 4)),
                      _mm256_loadu_pd(y + i + 4));
    acc0 = _mm256_add_pd(acc0, t0);
    acc1 = _mm256_add_pd(acc1, t1);
    abs0 = _mm256_add_pd(abs0, _mm256_andnot_pd(sign_mask, t0));
    abs1 = _mm256_add_pd(abs1, _mm256_andnot_pd(sign_mask, t1));
  }
  DotResult out;
  out.sum = hsum(_mm256_add_pd(acc0, acc1));
  out.abs_sum = hsum(_mm256_add_pd(abs0, abs1));
  for (; i < n; ++i) {
    const double t = w[i] * x[i] * y[i];
    out.sum += t;
    out.abs_sum += t < 0.0 ? -t : t;
  }
  return out;
}

__attribute__((target("avx2,fma"))) double dot(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

#else

bool compiled() { return false; }
DotResult weighted_dot(const double* w, const double* x, const double* y, std::size_t n) {
  return scalar::weighted_dot(w, x, y, n);
}
double dot(const double* x, const double* y, std::size_t n) { return scalar::dot(x, y, n); }

#endif

}  // namespace bnsum::kernels::avx2
