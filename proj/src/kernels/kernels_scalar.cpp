#include <cmath>

#include "bnsum/kernels.hpp"

namespace bnsum::kernels::scalar {

DotResult weighted_dot(const double* w, const double* x, const double* y, std::size_t n) {
  DotResult out;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = w[i] * x[i] * y[i];
    out.sum += t;
    out.abs_sum += std::fabs(t);
  }
  return out;
}

double dot(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

}  // namespace bnsum::kernels::scalar
