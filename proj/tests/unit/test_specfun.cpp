#include "doctest.h"

#include <cmath>

#include "bnsum/error.hpp"
#include "bnsum/specfun.hpp"

using namespace bnsum;
using namespace bnsum::specfun;

namespace {

double rel_err(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

// zeta(s, a) by brute force: partial sum plus the first two Euler-Maclaurin
// correction terms, which for s = 3 and N = 10^5 leave an error near 1e-25.
double zeta_brute(double s, double a, long n) {
  long double sum = 0.0L;
  for (long k = n - 1; k >= 0; --k) sum += std::pow(static_cast<long double>(k) + a, -s);
  const long double x = static_cast<long double>(n) + a;
  sum += std::pow(x, 1.0L - s) / (s - 1.0L) + 0.5L * std::pow(x, -static_cast<long double>(s)) +
         s / 12.0L * std::pow(x, -static_cast<long double>(s) - 1.0L);
  return static_cast<double>(sum);
}

}  // namespace

TEST_CASE("gamma family spot values") {
  CHECK(std::fabs(specfun::gamma(0.5) - std::sqrt(kPi)) <= 1e-15);
  CHECK(rel_err(specfun::gamma(7.0), 720.0) <= 1e-15);
  CHECK(reciprocal_gamma(0.0) == 0.0);
  CHECK(reciprocal_gamma(-4.0) == 0.0);
  // mpmath rgamma(-3.7)
  CHECK(rel_err(reciprocal_gamma(-3.7), 3.9738679097583531282) <= 1e-13);
  CHECK(std::fabs(digamma(0.5) - (-kEulerGamma - 2.0 * kLn2)) <= 1e-14);
  // mpmath digamma(-2.5)
  CHECK(rel_err(digamma(-2.5), 1.1031566406452431872) <= 1e-13);
  CHECK(std::fabs(harmonic_extended(3.0) - (1.0 + 0.5 + 1.0 / 3.0)) <= 1e-14);
  CHECK(sin_pi(3.0) == 0.0);
  CHECK(std::fabs(sin_pi(2.5) - 1.0) <= 1e-16);
}

TEST_CASE("gamma family errors") {
  CHECK_THROWS_AS(specfun::gamma(0.0), PoleError);
  CHECK_THROWS_AS(specfun::gamma(-2.0), PoleError);
  CHECK_THROWS_AS(digamma(-1.0), PoleError);
  CHECK_THROWS_AS(harmonic_extended(-1.0), DomainError);
  CHECK_THROWS_AS(specfun::gamma(NAN), DomainError);
}

TEST_CASE("hurwitz zeta against brute force and mpmath") {
  CHECK(rel_err(hurwitz_zeta(3.0, 2.0), zeta_brute(3.0, 2.0, 100000)) <= 1e-14);
  CHECK(rel_err(hurwitz_zeta(2.0, 1.0), kPi * kPi / 6.0) <= 1e-15);
  CHECK(rel_err(hurwitz_zeta(0.5, 3.0), -3.1674612899961343373) <= 1e-13);
  CHECK(rel_err(hurwitz_zeta(-1.5, 0.7), 0.023478274333161483805) <= 1e-11);
  CHECK(rel_err(hurwitz_zeta(-6.5, 2.5), -13.964374514305452056) <= 1e-11);
  CHECK_THROWS_AS(hurwitz_zeta(1.0, 2.0), PoleError);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), DomainError);
}

TEST_CASE("Phi(-1, s, a)") {
  CHECK(std::fabs(phi_minus_one(1.0, 1.0) - kLn2) <= 1e-14);
  CHECK(std::fabs(phi_minus_one(2.0, 1.0) - kPi * kPi / 12.0) <= 1e-14);
  // (1 - 2^{1-s}) zeta(s) is Phi(-1, s, 1) itself
  for (double s : {1.5, 2.5, 4.0}) {
    const double eta = (1.0 - std::pow(2.0, 1.0 - s)) * hurwitz_zeta(s, 1.0);
    CHECK(std::fabs(phi_minus_one(s, 1.0) - eta) <= 1e-13);
  }
  for (double s : {0.3, 1.0, 2.0})
    for (double a : {0.25, 1.0, 5.0}) {
      if (s == 1.0) continue;
      CHECK(std::fabs(phi_minus_one_zeta(s, a) - phi_minus_one_alternating(s, a)) <= 1e-12);
    }
  CHECK_THROWS_AS(phi_minus_one_zeta(1.0, 1.0), PoleError);
}

TEST_CASE("Lerch transcendent on the unit circle matches mpmath") {
  struct Case {
    double phi, alpha, v, re, im;
  };
  const Case cases[] = {
      {0.3, 1.5, 1.0, 0.77711810633676625113, -0.097161462806446729763},
      {1.5, 0.5, 2.0, 1.7285650753909514247, -2.7882388249396589978},
      {1.56, 2.5, 0.5, 6.2426418974730725662, -0.030441289044083221123},
      {2.7, 1.0, 3.0, 0.19825656104165988533, 0.074469674741318768185},
  };
  for (const Case& c : cases) {
    CAPTURE(c.phi);
    const ComplexValue want{c.re, c.im};
    CHECK(std::abs(lerch_unit(c.phi, c.alpha, c.v) - want) <= 1e-12 * std::abs(want));
    CHECK(std::abs(lerch_unit_quadrature(c.phi, c.alpha, c.v) - want) <= 1e-11 * std::abs(want));
    CHECK(std::abs(lerch_unit_series(c.phi, c.alpha, c.v) - want) <= 1e-11 * std::abs(want));
  }
}

TEST_CASE("Lerch at and near the branch point") {
  CHECK(std::abs(lerch_unit(0.5 * kPi, 2.0, 1.0) - ComplexValue(kPi * kPi / 6.0, 0.0)) <= 1e-14);
  CHECK_THROWS_AS(lerch_unit(0.5 * kPi, 1.0, 1.0), SingularityError);
  CHECK_THROWS_AS(lerch_unit(0.5 * kPi, 0.5, 1.0), SingularityError);
  CHECK_THROWS_AS(lerch_unit(4.0, 1.5, 1.0), DomainError);
  CHECK_THROWS_AS(lerch_unit_series(0.5 * kPi, 1.5, 1.0), DomainError);

  // alpha = 1 is the logarithm: Phi(z, 1, 1) = -log(1 - z) / z
  const LerchUnitCircle log_case(1.0, 1.0);
  for (double w : {1e-9, 1e-4, 0.3}) {
    const double theta = -2.0 * w;
    const ComplexValue z = std::polar(1.0, theta);
    const ComplexValue want = -std::log(ComplexValue(2.0 * std::pow(std::sin(0.5 * theta), 2), -std::sin(theta))) / z;
    CHECK(std::abs(log_case.at_offset(w) - want) <= 1e-13 * std::abs(want));
  }

  // near-integer alpha falls back to the integral and stays continuous
  const ComplexValue on = lerch_unit(1.2, 2.0, 1.0);
  const ComplexValue off = lerch_unit(1.2, 2.0 + 1e-9, 1.0);
  CHECK(std::abs(on - off) <= 1e-8);
}

TEST_CASE("Bessel rows match std::cyl_bessel_j") {
  for (double r : {1e-3, 0.7, 3.0, 17.5, 60.0, 250.0}) {
    const BesselRow row = bessel_j_row(40, r);
    for (int n = 0; n <= 40; ++n) {
      const double want = std::cyl_bessel_j(static_cast<double>(n), r);
      CAPTURE(r);
      CAPTURE(n);
      CHECK(std::fabs(row[n] - want) <= 1e-13 * std::max(1.0, std::fabs(want) * 1e2) + 1e-300);
    }
  }
}

TEST_CASE("Bessel row edge cases") {
  const BesselRow zero = bessel_j_row(5, 0.0);
  CHECK(zero[0] == 1.0);
  for (int n = 1; n <= 5; ++n) CHECK(zero[n] == 0.0);
  const BesselRow tiny = bessel_j_row(3, 1e-200);
  CHECK(tiny[0] == 1.0);
  CHECK(std::fabs(tiny[1] - 5e-201) <= 1e-214);
  const BesselRow row = bessel_j_row(6, 9.0);
  CHECK(row.at(-3) == -row[3]);
  CHECK(row.at(-4) == row[4]);
  CHECK(std::fabs(bessel_j(-3, 9.0) + std::cyl_bessel_j(3.0, 9.0)) <= 1e-15);
  CHECK(std::fabs(bessel_j(3, -9.0) + std::cyl_bessel_j(3.0, 9.0)) <= 1e-15);
  CHECK(std::fabs(bessel_j(2, -9.0) - std::cyl_bessel_j(2.0, 9.0)) <= 1e-15);
  CHECK_THROWS_AS(bessel_j_row(-1, 1.0), DomainError);
  CHECK_THROWS_AS(bessel_j_row(3, -1.0), DomainError);
}
