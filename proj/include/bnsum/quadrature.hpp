#pragma once

// Integral-representation routes for S.
//
// Hankel form (a < 0, alpha = -a, nu >= 0 after canonicalisation):
//   S = ((-1)^{m'} / pi) int_0^pi J_nu(2 r cos phi) F(phi) dphi
// 2D form:
//   S = Re[(2 i^{-mu} / pi^2) int_0^{pi/2} dtheta int_0^pi dphi
//          e^{2 i r cos phi cos theta} F(phi) cos(nu theta)]
// a >= 0 is lifted to negative exponents with the Bessel recurrence
//   (l+m) J_{l+m} = (r/2)(J_{l+m-1} + J_{l+m+1}).
//
// Integration runs in the offset w = pi/2 - phi. Regular panels are at most
// one period of J_nu(2 r cos phi) wide; the panel next to w = 0 is replaced
// by w = h t^q with q = max(1, grading_exponent / alpha) and geometrically
// graded Gauss panels in t. No node sits on w = 0.

#include <cstdint>
#include <vector>

#include "bnsum/series.hpp"

namespace bnsum::quadrature {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  int max_panels = 8192;
  double grading_exponent = 1.0;
  int oscillation_panels_per_period = 4;
};

/// Throws DomainError unless tolerances > 0, max_panels >= 8,
/// grading_exponent > 0 and oscillation_panels_per_period >= 4.
void validate(const QuadratureConfig& cfg);

/// 20-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre20();

/// Throws DomainError for a >= 0, ConvergenceError if the panel doubling
/// does not meet the tolerance within max_panels.
EvalResult eval_hankel(const SeriesSpec& spec, double r, const QuadratureConfig& cfg = {});

/// Same integral over the full range [0, pi] without the parity reduction.
EvalResult eval_hankel_full(const SeriesSpec& spec, double r, const QuadratureConfig& cfg = {});

/// Iterated quadrature, theta inner. imag_residue carries |Im| of the result.
EvalResult eval_exp2d(const SeriesSpec& spec, double r, const QuadratureConfig& cfg = {});

/// a >= 0 via the recurrence, every leaf evaluated by eval_hankel.
EvalResult eval_lifted(const SeriesSpec& spec, double r, const QuadratureConfig& cfg = {});

}  // namespace bnsum::quadrature
