#include <cmath>
#include <string>

#include "bnsum/error.hpp"
#include "bnsum/specfun.hpp"

namespace bnsum::specfun {

namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::nearbyint(x); }

}  // namespace

double sin_pi(double x) {
  if (x == std::nearbyint(x)) return 0.0;
  // reduce to y in (-1, 1]
  double y = std::remainder(x, 2.0);
  if (y > 0.5) return std::sin(kPi * (1.0 - y));
  if (y < -0.5) return -std::sin(kPi * (1.0 + y));
  return std::sin(kPi * y);
}

double gamma(double x) {
  if (std::isnan(x)) throw DomainError("gamma: NaN argument");
  if (is_nonpositive_integer(x))
    throw PoleError("gamma: pole at x = " + std::to_string(x));
  return std::tgamma(x);
}

double reciprocal_gamma(double x) {
  if (std::isnan(x)) throw DomainError("reciprocal_gamma: NaN argument");
  if (is_nonpositive_integer(x)) return 0.0;
  if (x > 0.5) return 1.0 / std::tgamma(x);
  // reflection: 1/Gamma(x) = Gamma(1 - x) sin(pi x) / pi
  return std::tgamma(1.0 - x) * sin_pi(x) / kPi;
}

double digamma(double x) {
  if (std::isnan(x)) throw DomainError("digamma: NaN argument");
  if (is_nonpositive_integer(x))
    throw PoleError("digamma: pole at x = " + std::to_string(x));
  if (x < 0.0) {
    // psi(x) = psi(1 - x) - pi cot(pi x)
    double s = sin_pi(x);
    double c = std::cos(kPi * std::remainder(x, 2.0));
    return digamma(1.0 - x) - kPi * c / s;
  }
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  // ln x - 1/(2x) - sum B_{2k} / (2k x^{2k})
  double series =
      inv2 * (1.0 / 12 -
              inv2 * (1.0 / 120 -
                      inv2 * (1.0 / 252 -
                              inv2 * (1.0 / 240 -
                                      inv2 * (1.0 / 132 -
                                              inv2 * (691.0 / 32760 - inv2 / 12))))));
  return acc + std::log(x) - 0.5 / x - series;
}

double harmonic_extended(double beta) {
  if (!(beta > -1.0)) throw DomainError("harmonic_extended: beta must exceed -1");
  return digamma(beta + 1.0) + kEulerGamma;
}

}  // namespace bnsum::specfun
