#include "doctest.h"

#include <cmath>

#include "bnsum/asymptotics.hpp"
#include "bnsum/direct.hpp"
#include "bnsum/error.hpp"

using namespace bnsum;
using namespace bnsum::asymptotics;
using direct::DerivativeKind;
using specfun::kPi;

TEST_CASE("non-integer form tracks the oracle at large r") {
  for (const SeriesSpec& s : {SeriesSpec{-0.5, 0.0, 0, 0}, SeriesSpec{-1.5, 0.5, 1, 1}, SeriesSpec{-2.5, 0.0, 2, 0}}) {
    CAPTURE(s.a);
    const double r = 300.0;
    const EvalResult a = eval_asym(s, r);
    const double o = direct::sum_series(s, r).value;
    // remainder r^{-min(alpha+1, 2)} with an O(1) constant
    CHECK(std::fabs(a.value - o) <= 10.0 * a.err_est);
    CHECK(a.method == Method::asym);
  }
}

TEST_CASE("alpha = 1 form: log, the gamma + log 2 constant and the oscillation") {
  const AsymptoticForm f = leading_integer(1, 0.0, 0, 0);
  REQUIRE(f.terms.size() == 3);
  CHECK(f.terms[0].osc == Osc::log_r);
  CHECK(std::fabs(f.terms[1].coeff * kPi - (specfun::kEulerGamma + specfun::kLn2)) <= 1e-14);
  CHECK(f.error_kind == ErrorKind::little_o);
  const double r = 400.0;
  CHECK(std::fabs(r * (eval_form(f, r) - direct::sum_series({-1.0, 0.0, 0, 0}, r).value)) <= 0.01);
}

TEST_CASE("phase conventions differ only when m' is odd") {
  const SeriesSpec even{-1.5, 0.0, 2, 0};
  const SeriesSpec odd{-1.5, 0.0, 1, 1};
  CHECK(eval_asym(even, 77.0, PhaseConvention::mu).value == eval_asym(even, 77.0, PhaseConvention::nu).value);
  CHECK(std::fabs(eval_asym(odd, 77.0, PhaseConvention::mu).value - eval_asym(odd, 77.0, PhaseConvention::nu).value) >
        1e-4);
  // the oracle sides with mu
  const double o = direct::sum_series(odd, 200.0).value;
  CHECK(std::fabs(eval_asym(odd, 200.0, PhaseConvention::mu).value - o) <
        0.1 * std::fabs(eval_asym(odd, 200.0, PhaseConvention::nu).value - o));
}

TEST_CASE("non-negative a coefficients") {
  CHECK(std::fabs(leading_nonneg_coefficient(1.0, 0) - 1.0 / kPi) <= 1e-15);
  CHECK(std::fabs(leading_nonneg_coefficient(2.0, 0) - 0.25) <= 1e-15);
  CHECK(leading_nonneg_coefficient(0.0, 2) == 0.0);
  CHECK(leading_nonneg_coefficient(1.0, 3) == 0.0);
  CHECK(leading_nonneg_coefficient(2.0, -1) == leading_nonneg_coefficient(2.0, 1));
  const double r = 500.0;
  CHECK(std::fabs(direct::sum_series({1.0, 0.0, 0, 0}, r).value / eval_asym({1.0, 0.0, 0, 0}, r).value - 1.0) <= 0.02);
}

TEST_CASE("derivative tables: regime dispatch and variants") {
  CHECK(regime_of(-0.5) == Regime::above_minus_one);
  CHECK(regime_of(-1.0) == Regime::minus_one);
  CHECK(regime_of(-1.0001) == Regime::below_minus_one);
  CHECK_THROWS_AS(derivative_series_form(DerivativeKind::JJ, Regime::minus_one, -0.5, 0.0), DomainError);
  CHECK_THROWS_AS(derivative_series_form(DerivativeKind::JJ, Regime::minus_one, -1.0, -1.0), DomainError);
  CHECK(variants_differ(DerivativeKind::JJ, Regime::minus_one));
  CHECK_FALSE(variants_differ(DerivativeKind::JdJ, Regime::minus_one));
  CHECK(variants_differ(DerivativeKind::JddJ, Regime::below_minus_one));
  CHECK_FALSE(variants_differ(DerivativeKind::JJ, Regime::above_minus_one));
  for (auto k : direct::kAllKinds)
    for (double a : {0.5, -1.0, -2.0}) {
      const Regime g = regime_of(a);
      const auto p = derivative_series_form(k, g, a, 0.5, TableVariant::as_printed);
      const auto c = derivative_series_form(k, g, a, 0.5, TableVariant::corrected);
      const bool same = std::fabs(eval_form(p, 123.4) - eval_form(c, 123.4)) == 0.0;
      CHECK(same == !variants_differ(k, g));
    }
}

TEST_CASE("a = -1, J J': only the cos 2r term survives at order 1/r") {
  const AsymptoticForm f = derivative_series_form(DerivativeKind::JdJ, Regime::minus_one, -1.0, 0.0);
  REQUIRE(f.terms.size() == 1);
  CHECK(f.terms[0].osc == Osc::cos2r);
  CHECK(std::fabs(f.terms[0].coeff + specfun::kLn2 / kPi) <= 1e-15);
}

TEST_CASE("corrected forms beat the printed ones where they differ") {
  const double r = 250.0;
  for (auto k : {DerivativeKind::JJ, DerivativeKind::dJdJ, DerivativeKind::JddJ, DerivativeKind::ddJddJ}) {
    CAPTURE(direct::kind_name(k));
    double worst_c = 0.0, worst_p = 0.0;
    for (double dr = 0.0; dr < 3.2; dr += 0.1) {
      const double o = direct::sum_derivative_series(k, -1.0, 0.0, r + dr).value;
      worst_c = std::max(worst_c, std::fabs(o - eval_form(derivative_series_form(k, Regime::minus_one, -1.0, 0.0,
                                                                                   TableVariant::corrected), r + dr)));
      worst_p = std::max(worst_p, std::fabs(o - eval_form(derivative_series_form(k, Regime::minus_one, -1.0, 0.0,
                                                                                   TableVariant::as_printed), r + dr)));
    }
    CHECK(worst_c * 2.0 < worst_p);
  }
}

TEST_CASE("form evaluation rejects r <= 0") {
  CHECK_THROWS_AS(eval_asym({-0.5, 0.0, 0, 0}, 0.0), DomainError);
  CHECK_THROWS_AS(leading_noninteger(2.0, 0.0, 0, 0), DomainError);
  CHECK(std::isinf(AsymptoticForm{}.leading_power()));
}
