#include <cmath>

#include "bnsum/error.hpp"
#include "bnsum/specfun.hpp"

namespace bnsum::specfun {

double BesselRow::at(int n) const {
  if (n >= 0) return values[static_cast<std::size_t>(n)];
  const double v = values[static_cast<std::size_t>(-n)];
  return (n % 2 == 0) ? v : -v;
}

BesselRow bessel_j_row(int order_max, double r) {
  if (order_max < 0) throw DomainError("bessel_j_row: order_max must be >= 0");
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("bessel_j_row: r must be >= 0");

  BesselRow row;
  row.order_max = order_max;
  row.argument = r;
  row.values.assign(static_cast<std::size_t>(order_max) + 1, 0.0);

  if (r < 1e-150) {
    // leading power-series term; the recurrence coefficients 2k/r would overflow
    const double half = 0.5 * r;
    double term = 1.0;
    for (int n = 0; n <= order_max && term != 0.0; ++n) {
      if (n > 0) term *= half / n;
      row.values[static_cast<std::size_t>(n)] = term;
    }
    return row;
  }

  // start well above both the requested orders and the turning point n ~ r
  const double base = std::max(static_cast<double>(order_max), std::ceil(r));
  const int start = static_cast<int>(base + 10.0 + std::ceil(10.0 * std::sqrt(base)));
  constexpr double kRescale = 1e140;  // squares must stay finite

  double f_next = 0.0;  // f_{k+1}
  double f = 1e-30;     // f_k
  double sum_sq = 0.0;  // 2 sum_{k>=1} f_k^2
  double even_sum = 0.0;  // 2 sum_{k>=1} f_{2k}
  for (int k = start; k >= 1; --k) {
    if (k <= order_max) row.values[static_cast<std::size_t>(k)] = f;
    sum_sq += 2.0 * f * f;
    if (k % 2 == 0) even_sum += 2.0 * f;
    const double f_prev = (2.0 * k / r) * f - f_next;
    f_next = f;
    f = f_prev;
    if (std::fabs(f) > kRescale) {
      const double s = 1.0 / kRescale;
      f *= s;
      f_next *= s;
      sum_sq *= s * s;
      even_sum *= s;
      for (int j = k; j <= order_max; ++j) row.values[static_cast<std::size_t>(j)] *= s;
    }
  }
  row.values[0] = f;
  sum_sq += f * f;
  even_sum += f;

  const double norm = std::copysign(std::sqrt(sum_sq), even_sum);
  for (double& v : row.values) v /= norm;
  return row;
}

double bessel_j(int n, double x) {
  // J_{-n} = (-1)^n J_n and J_n(-x) = (-1)^n J_n(x)
  const int order = n < 0 ? -n : n;
  const bool flip = (order % 2 == 1) && ((n < 0) != (x < 0.0));
  const double value = bessel_j_row(order, std::fabs(x))[order];
  return flip ? -value : value;
}

}  // namespace bnsum::specfun
