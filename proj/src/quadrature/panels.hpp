#pragma once

// Panel layout shared by the Hankel and 2D routes.

#include <cmath>
#include <cstdint>

#include "bnsum/quadrature.hpp"

namespace bnsum::quadrature::detail {

inline constexpr int kGradingLevels = 20;
inline constexpr double kGradingRatio = 0.15;  // kGradingRatio^kGradingLevels < 1e-16

struct Layout {
  int panels = 1;      // regular panels on [0, half_width]
  double q = 1.0;      // grading power in the zone next to w = 0
};

// Integrates f(w) over [0, width] where f may be singular at w = 0.
// Accumulates into T (double or complex) and counts nodes.
template <class T, class F>
T graded_integral(F&& f, double width, const Layout& layout, std::int64_t& nodes) {
  const GaussRule& g = gauss_legendre20();
  const std::size_t n = g.nodes.size();
  const double h = width / layout.panels;
  T total{};

  for (int p = 1; p < layout.panels; ++p) {
    const double lo = p * h;
    const double half = 0.5 * h;
    const double mid = lo + half;
    T acc{};
    for (std::size_t i = 0; i < n; ++i) acc += g.weights[i] * f(mid + half * g.nodes[i]);
    total += half * acc;
    nodes += static_cast<std::int64_t>(n);
  }

  // zone [0, h] with w = h t^q, t in (0, 1], graded geometrically toward t = 0
  const double q = layout.q;
  double t_hi = 1.0;
  for (int level = 0; level <= kGradingLevels; ++level) {
    const double t_lo = level == kGradingLevels ? 0.0 : t_hi * kGradingRatio;
    const double half = 0.5 * (t_hi - t_lo);
    const double mid = t_lo + half;
    T acc{};
    for (std::size_t i = 0; i < n; ++i) {
      const double t = mid + half * g.nodes[i];
      const double tq1 = std::pow(t, q - 1.0);
      acc += (g.weights[i] * h * q * tq1) * f(h * t * tq1);
    }
    total += half * acc;
    nodes += static_cast<std::int64_t>(n);
    t_hi = t_lo;
  }
  return total;
}

}  // namespace bnsum::quadrature::detail
