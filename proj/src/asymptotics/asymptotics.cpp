#include "bnsum/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "bnsum/error.hpp"
#include "bnsum/specfun.hpp"

namespace bnsum::asymptotics {

namespace {

using direct::DerivativeKind;
using specfun::kPi;

double cos_half_pi(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0:
      return 1.0;
    case 2:
      return -1.0;
    default:
      return 0.0;
  }
}

double sin_half_pi(int n) { return cos_half_pi(n - 1); }

double phase_for(PhaseConvention c, int mu, int nu) {
  return -0.5 * kPi * (c == PhaseConvention::mu ? mu : nu);
}

bool is_integer(double x) { return x == std::nearbyint(x); }

}  // namespace

double AsymptoticForm::leading_power() const {
  double p = std::numeric_limits<double>::infinity();
  for (const Term& t : terms)
    if (t.coeff != 0.0) p = std::min(p, t.power);
  return p;
}

double eval_term(const Term& term, double r) {
  const double scale = term.coeff * std::pow(r, -term.power);
  switch (term.osc) {
    case Osc::constant:
      return scale;
    case Osc::log_r:
      return scale * std::log(r);
    case Osc::sin2r:
      return scale * std::sin(2.0 * r + term.phase);
    case Osc::cos2r:
      return scale * std::cos(2.0 * r + term.phase);
  }
  return 0.0;
}

double eval_form(const AsymptoticForm& form, double r) {
  if (!(r > 0.0)) throw DomainError("eval_form: r must be > 0");
  double sum = 0.0;
  for (const Term& t : form.terms) sum += eval_term(t, r);
  return sum;
}

const char* convention_name(PhaseConvention c) { return c == PhaseConvention::mu ? "mu" : "nu"; }

const char* variant_name(TableVariant v) {
  return v == TableVariant::as_printed ? "as_printed" : "corrected";
}

AsymptoticForm leading_noninteger(double alpha, double beta, int m, int m_prime,
                                  PhaseConvention phase) {
  if (!(alpha > 0.0) || is_integer(alpha))
    throw DomainError("leading_noninteger: alpha must be positive and non-integer");
  const SeriesSpec s = SeriesSpec{-alpha, beta, m, m_prime}.canonical();
  validate(s);
  const int nu = s.nu();
  const int mu = s.mu();

  AsymptoticForm f;
  f.label = "noninteger";
  const double c1 = std::pow(2.0, alpha - 1.0) * std::tgamma(1.0 - alpha) *
                    specfun::reciprocal_gamma(0.5 * (nu - alpha + 2.0)) *
                    specfun::reciprocal_gamma(0.5 * (-nu - alpha + 2.0));
  f.terms.push_back({c1, alpha, Osc::constant, 0.0});
  f.terms.push_back({cos_half_pi(nu) * specfun::hurwitz_zeta(alpha, beta + 1.0) / kPi, 1.0,
                     Osc::constant, 0.0});
  f.terms.push_back({-specfun::phi_minus_one(alpha, beta + 1.0) / kPi, 1.0, Osc::sin2r,
                     phase_for(phase, mu, nu)});
  f.error_exponent = std::min(alpha + 1.0, 2.0);
  f.error_kind = ErrorKind::big_o;
  return f;
}

AsymptoticForm leading_integer(int alpha, double beta, int m, int m_prime, PhaseConvention phase) {
  if (alpha < 1) throw DomainError("leading_integer: alpha must be a positive integer");
  const SeriesSpec s = SeriesSpec{-static_cast<double>(alpha), beta, m, m_prime}.canonical();
  validate(s);
  const int nu = s.nu();
  const int mu = s.mu();
  const double cn = cos_half_pi(nu);
  const double osc = -specfun::phi_minus_one(alpha, beta + 1.0) / kPi;

  AsymptoticForm f;
  f.label = "integer";
  if (alpha == 1) {
    f.terms.push_back({cn / kPi, 1.0, Osc::log_r, 0.0});
    const double c = -cn * (specfun::harmonic_extended(beta) + specfun::digamma(0.5 * (nu + 1.0)) +
                            specfun::kLn2) +
                     0.5 * kPi * sin_half_pi(nu);
    f.terms.push_back({c / kPi, 1.0, Osc::constant, 0.0});
    f.terms.push_back({osc, 1.0, Osc::sin2r, phase_for(phase, mu, nu)});
    f.error_exponent = 1.0;
    f.error_kind = ErrorKind::little_o;
    return f;
  }
  f.terms.push_back({cn * specfun::hurwitz_zeta(alpha, beta + 1.0) / kPi, 1.0, Osc::constant, 0.0});
  f.terms.push_back({osc, 1.0, Osc::sin2r, phase_for(phase, mu, nu)});
  f.error_exponent = 2.0;
  f.error_kind = ErrorKind::big_o_plus_epsilon;
  return f;
}

double leading_nonneg_coefficient(double a, int nu) {
  if (!(a >= 0.0)) throw DomainError("leading_nonneg: a must be >= 0");
  nu = std::abs(nu);
  return std::pow(2.0, -a - 1.0) * std::tgamma(a + 1.0) *
         specfun::reciprocal_gamma(0.5 * (a - nu + 2.0)) *
         specfun::reciprocal_gamma(0.5 * (a + nu + 2.0));
}

AsymptoticForm leading_nonneg(double a, int m, int m_prime) {
  if (m < 0 || m_prime < 0) throw DomainError("leading_nonneg: m and m' must be >= 0");
  AsymptoticForm f;
  f.label = "nonneg";
  f.terms.push_back({leading_nonneg_coefficient(a, m - m_prime), -a, Osc::constant, 0.0});
  f.error_exponent = -a;
  f.error_kind = ErrorKind::little_o;
  return f;
}

AsymptoticForm asymptotic_form(const SeriesSpec& spec, PhaseConvention phase) {
  validate(spec);
  if (spec.a >= 0.0) return leading_nonneg(spec.a, spec.m, spec.m_prime);
  const double alpha = -spec.a;
  if (is_integer(alpha))
    return leading_integer(static_cast<int>(alpha), spec.beta, spec.m, spec.m_prime, phase);
  return leading_noninteger(alpha, spec.beta, spec.m, spec.m_prime, phase);
}

EvalResult eval_asym(const SeriesSpec& spec, double r, PhaseConvention phase) {
  const AsymptoticForm f = asymptotic_form(spec, phase);
  EvalResult out;
  out.method = Method::asym;
  out.value = eval_form(f, r);
  out.err_est = std::pow(r, -f.error_exponent);
  out.work = static_cast<std::int64_t>(f.terms.size());
  return out;
}

Regime regime_of(double a) {
  if (a > -1.0) return Regime::above_minus_one;
  if (a == -1.0) return Regime::minus_one;
  return Regime::below_minus_one;
}

const char* regime_name(Regime regime) {
  switch (regime) {
    case Regime::above_minus_one:
      return "a>-1";
    case Regime::minus_one:
      return "a=-1";
    case Regime::below_minus_one:
      return "a<-1";
  }
  return "unknown";
}

bool variants_differ(DerivativeKind kind, Regime regime) {
  switch (regime) {
    case Regime::above_minus_one:
      return false;
    case Regime::minus_one:
      return kind == DerivativeKind::JJ || kind == DerivativeKind::dJdJ ||
             kind == DerivativeKind::JddJ || kind == DerivativeKind::ddJddJ;
    case Regime::below_minus_one:
      return kind == DerivativeKind::JddJ;
  }
  return false;
}

AsymptoticForm derivative_series_form(DerivativeKind kind, Regime regime, double a, double beta,
                                      TableVariant variant) {
  if (regime_of(a) != regime)
    throw DomainError(std::string("derivative_series_form: a does not lie in regime ") +
                      regime_name(regime));
  if (!(beta > -1.0)) throw DomainError("derivative_series_form: beta must exceed -1");
  const bool corrected = variant == TableVariant::corrected;

  AsymptoticForm f;
  f.label = std::string(direct::kind_name(kind)) + " " + regime_name(regime);

  if (regime == Regime::above_minus_one) {
    // r^a times a constant; the J J' and J' J'' series vanish at this order
    const double d = std::tgamma(0.5 * (a + 1.0)) /
                     (4.0 * std::sqrt(kPi) * std::tgamma(0.5 * a + 2.0));
    double c = 0.0;
    switch (kind) {
      case DerivativeKind::JJ:
        c = std::pow(2.0, -a - 1.0) * std::tgamma(1.0 + a) *
            std::pow(specfun::reciprocal_gamma(0.5 * a + 1.0), 2);
        break;
      case DerivativeKind::dJdJ:
        c = d;
        break;
      case DerivativeKind::JddJ:
        c = -d;
        break;
      case DerivativeKind::ddJddJ: {
        const double g = std::tgamma(0.5 * a + 3.0);
        c = 3.0 * std::pow(2.0, -a - 5.0) * (a + 2.0) * (a + 4.0) * std::tgamma(a + 1.0) / (g * g);
        break;
      }
      case DerivativeKind::JdJ:
      case DerivativeKind::dJddJ:
        break;
    }
    if (c != 0.0) f.terms.push_back({c, -a, Osc::constant, 0.0});
    f.error_exponent = -a;
    f.error_kind = ErrorKind::little_o;
    return f;
  }

  if (regime == Regime::minus_one) {
    const double phi = specfun::phi_minus_one(1.0, beta + 1.0) / kPi;
    const double h = specfun::harmonic_extended(beta);
    const double psi = specfun::digamma(beta + 1.0);
    const double g = specfun::kEulerGamma;
    const double ln2 = specfun::kLn2;
    auto add = [&](double c, Osc osc) { f.terms.push_back({c, 1.0, osc, 0.0}); };
    switch (kind) {
      case DerivativeKind::JJ:  // (-H + log 2r + gamma) / (pi r)
        add(1.0 / kPi, Osc::log_r);
        add((-h + ln2 + g) / kPi, Osc::constant);
        if (corrected) add(-phi, Osc::sin2r);
        break;
      case DerivativeKind::JdJ:
        add(-phi, Osc::cos2r);
        break;
      case DerivativeKind::dJdJ:  // (-H + log r + gamma - 1 + log 2) / (pi r)
        add(1.0 / kPi, Osc::log_r);
        add((-h + g - 1.0 + ln2) / kPi, Osc::constant);
        if (corrected) add(phi, Osc::sin2r);
        break;
      case DerivativeKind::JddJ:  // (psi(beta+1) - log 2r + 1) / (pi r)
        add(-1.0 / kPi, Osc::log_r);
        add((psi - ln2 + 1.0) / kPi, Osc::constant);
        if (corrected) add(phi, Osc::sin2r);
        break;
      case DerivativeKind::dJddJ:
        add(phi, Osc::cos2r);
        break;
      case DerivativeKind::ddJddJ:  // (-3 psi + 3 log r - 4 + log 8) / (3 pi r)
        add(1.0 / kPi, Osc::log_r);
        add((-3.0 * psi - 4.0 + 3.0 * ln2) / (3.0 * kPi), Osc::constant);
        if (corrected) add(-phi, Osc::sin2r);
        break;
    }
    f.error_exponent = 1.0;
    f.error_kind = ErrorKind::little_o;
    return f;
  }

  // a < -1 with alpha = -a: zeta(alpha, beta+1) and Phi(-1, alpha, beta+1)
  const double alpha = -a;
  const double z = specfun::hurwitz_zeta(alpha, beta + 1.0) / kPi;
  const double phi = specfun::phi_minus_one(alpha, beta + 1.0) / kPi;
  auto add = [&](double c, Osc osc) { f.terms.push_back({c, 1.0, osc, 0.0}); };
  switch (kind) {
    case DerivativeKind::JJ:
    case DerivativeKind::ddJddJ:
      add(z, Osc::constant);
      add(-phi, Osc::sin2r);
      break;
    case DerivativeKind::JdJ:
      add(-phi, Osc::cos2r);
      break;
    case DerivativeKind::dJdJ:
      add(z, Osc::constant);
      add(phi, Osc::sin2r);
      break;
    case DerivativeKind::JddJ:
      add(corrected ? -z : z, Osc::constant);
      add(corrected ? phi : -phi, Osc::sin2r);
      break;
    case DerivativeKind::dJddJ:
      add(phi, Osc::cos2r);
      break;
  }
  f.error_exponent = 2.0;
  f.error_kind = ErrorKind::big_o_plus_epsilon;
  return f;
}

}  // namespace bnsum::asymptotics
