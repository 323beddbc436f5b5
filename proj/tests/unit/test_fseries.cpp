#include "doctest.h"

#include <cmath>

#include "bnsum/error.hpp"
#include "bnsum/fseries.hpp"

using namespace bnsum;
using namespace bnsum::fseries;
using specfun::kPi;

namespace {

// Partial sums of sum_{l>=1} (-1)^l cos(phi (mu + 2l)) / (l + beta)^alpha,
// averaged over two consecutive cutoffs to cancel the leading oscillation.
double f_partial(const FParams& p, double phi, long n) {
  long double s = 0.0L, prev = 0.0L;
  for (long l = 1; l <= n; ++l) {
    prev = s;
    s += ((l % 2) ? -1.0L : 1.0L) * std::cos(phi * (p.mu + 2.0 * l)) /
         std::pow(static_cast<long double>(l) + p.beta, static_cast<long double>(p.alpha));
  }
  return static_cast<double>(0.5L * (s + prev));
}

}  // namespace

TEST_CASE("amplitude matches long partial sums") {
  const FParams p{1.5, 0.0, 0};
  const double direct = f_partial(p, 0.3, 1000000);
  CHECK(std::fabs(f_eval(p, 0.3) - direct) <= 1e-9);
  // mpmath value of the same series
  CHECK(std::fabs(f_eval(p, 0.3) - (-0.69624473882861156334)) <= 1e-13);
}

TEST_CASE("amplitude matches mpmath at assorted parameters") {
  CHECK(std::fabs(f_eval({0.5, 0.5, 1}, 1.2) - 0.98856813941264887178) <= 1e-12);
  CHECK(std::fabs(f_eval({2.0, 1.0, 2}, 1.5707) - (-0.64463147513358950761)) <= 1e-12);
  CHECK(std::fabs(f_eval({1.0, 0.0, 0}, 0.8) - (-0.33175643374860156295)) <= 1e-12);
}

TEST_CASE("evaluator agrees with f_eval and keeps precision near pi/2") {
  const FParams p{0.5, 0.25, 3};
  const FEvaluator f(p);
  for (double phi : {0.1, 0.9, 1.5, 1.65, 2.5}) CHECK(std::fabs(f(phi) - f_eval(p, phi)) <= 1e-12);
  // w = 1e-12 cannot be represented as pi/2 - phi, but at_offset sees it
  const double tiny = f.at_offset(1e-12);
  const double model = f_singular_model(p, 0.5 * kPi - 1e-12, Side::below);
  CHECK(std::fabs(tiny / model - 1.0) <= 1e-3);
}

TEST_CASE("parity and the value at pi/2") {
  for (int mu : {0, 1, 2, 5}) {
    const FParams p{1.7, 0.5, mu};
    const double sign = mu % 2 ? -1.0 : 1.0;
    for (double phi : {0.2, 0.8, 1.4})
      CHECK(std::fabs(f_eval(p, kPi - phi) - sign * f_eval(p, phi)) <= 1e-12);
    CHECK(std::fabs(f_eval(p, 0.5 * kPi) - std::cos(0.5 * kPi * mu) * specfun::hurwitz_zeta(1.7, 1.5)) <=
          1e-12);
  }
}

TEST_CASE("singular model") {
  const FParams p{0.5, 0.0, 0};
  // Gamma(1/2) (pi - 2 phi)^{-1/2} sin(pi/4) is positive just below pi/2
  CHECK(f_singular_model(p, 0.5 * kPi - 1e-3, Side::below) > 0.0);
  CHECK(f_eval(p, 0.5 * kPi - 1e-3) > 0.0);
  for (double d : {1e-3, 1e-5}) {
    CHECK(std::fabs(f_eval(p, 0.5 * kPi - d) / f_singular_model(p, 0.5 * kPi - d, Side::below) - 1.0) <= 0.1);
    CHECK(std::fabs(f_eval(p, 0.5 * kPi + d) / f_singular_model(p, 0.5 * kPi + d, Side::above) - 1.0) <= 0.1);
  }
  // mu -> mu + 2 flips the model: sin(pi (mu + 2 + alpha)/2) = -sin(pi (mu + alpha)/2)
  const FParams q{0.5, 0.0, 2};
  const double phi = 0.5 * kPi - 1e-4;
  CHECK(std::fabs(f_singular_model(q, phi, Side::below) + f_singular_model(p, phi, Side::below)) <= 1e-12);
}

TEST_CASE("alpha = 0 closed form fixture") {
  // -cos((mu+1) phi) / (2 cos phi) is the Abel sum of the alpha = 0 series
  CHECK(std::fabs(f_alpha_zero_closed_form(0, 0.4) + 0.5) <= 1e-15);
  CHECK(std::fabs(f_alpha_zero_closed_form(1, 0.4) + std::cos(0.8) / (2.0 * std::cos(0.4))) <= 1e-15);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(validate(FParams{0.0, 0.0, 0}), DomainError);
  CHECK_THROWS_AS(validate(FParams{1.0, -1.0, 0}), DomainError);
  CHECK_THROWS_AS(validate(FParams{1.0, 0.0, -1}), DomainError);
  CHECK_THROWS_AS(f_eval({0.5, 0.0, 0}, 0.5 * kPi), SingularityError);
}
