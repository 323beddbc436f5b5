#include "bnsum/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>
#define BNSUM_HAVE_NEON 1
#endif

namespace bnsum::kernels::neon {

#if BNSUM_HAVE_NEON

bool compiled() { return true; }

DotResult weighted_dot(const double* w, const double* x, const double* y, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  float64x2_t abs0 = vdupq_n_f64(0.0);
  float64x2_t abs1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const float64x2_t t0 = vmulq_f64(vmulq_f64(vld1q_f64(w + i), vld1q_f64(x + i)), vld1q_f64(y + i));
    const float64x2_t t1 =
        vmulq_f64(vmulq_f64(vld1q_f64(w + i + 2), vld1q_f64(x + i + 2)), vld1q_f64(y + i + 2));
    acc0 = vaddq_f64(acc0, t0);
    acc1 = vaddq_f64(acc1, t1);
    abs0 = vaddq_f64(abs0, vabsq_f64(t0));
    abs1 = vaddq_f64(abs1, vabsq_f64(t1));
  }
  DotResult out;
  out.sum = vaddvq_f64(vaddq_f64(acc0, acc1));
  out.abs_sum = vaddvq_f64(vaddq_f64(abs0, abs1));
  for (; i < n; ++i) {
    const double t = w[i] * x[i] * y[i];
    out.sum += t;
    out.abs_sum += t < 0.0 ? -t : t;
  }
  return out;
}

double dot(const double* x, const double* y, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
  }
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
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

}  // namespace bnsum::kernels::neon
