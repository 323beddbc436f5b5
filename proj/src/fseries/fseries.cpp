#include "bnsum/fseries.hpp"

#include <cmath>

#include "bnsum/error.hpp"

namespace bnsum::fseries {

namespace {

using specfun::ComplexValue;
using specfun::kPi;

// i^mu
ComplexValue i_power(int mu) {
  switch (mu % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

void check_phi(double phi) {
  if (!(phi >= -1e-14 && phi <= kPi + 1e-14))
    throw DomainError("fseries: phi must lie in [0, pi]");
}

}  // namespace

void validate(const FParams& p) {
  if (!(p.alpha > 0.0) || !std::isfinite(p.alpha)) throw DomainError("fseries: alpha must be > 0");
  if (!(p.beta > -1.0) || !std::isfinite(p.beta)) throw DomainError("fseries: beta must be > -1");
  if (p.mu < 0) throw DomainError("fseries: mu must be >= 0");
}

FEvaluator::FEvaluator(const FParams& p)
    : params_(p), lerch_((validate(p), p.alpha), p.beta + 1.0) {}

double FEvaluator::at_offset(double w) const {
  if (!(std::fabs(w) <= 0.5 * kPi + 1e-14)) throw DomainError("fseries: offset outside [-pi/2, pi/2]");
  // phi = pi/2 - w:  -e^{i phi (mu+2)} = i^mu e^{-i w (mu+2)}
  const ComplexValue pref = i_power(params_.mu) * std::polar(1.0, -w * (params_.mu + 2));
  return (pref * lerch_.at_offset(w)).real();
}

double f_eval(const FParams& p, double phi) {
  validate(p);
  check_phi(phi);
  const ComplexValue pref = -std::polar(1.0, phi * (p.mu + 2));
  return (pref * specfun::lerch_unit(phi, p.alpha, p.beta + 1.0)).real();
}

SymmetrizedValue f_eval_symmetrized(const FParams& p, double phi) {
  validate(p);
  check_phi(phi);
  // F = -(1/2) [e^{i phi (mu+2)} Phi(z) + e^{-i phi (mu+2)} Phi(conj z)]
  // where Phi(conj z) is evaluated on its own at the mirrored angle pi - phi.
  const ComplexValue up = std::polar(1.0, phi * (p.mu + 2)) * specfun::lerch_unit(phi, p.alpha, p.beta + 1.0);
  const ComplexValue down =
      std::polar(1.0, -phi * (p.mu + 2)) * specfun::lerch_unit(kPi - phi, p.alpha, p.beta + 1.0);
  const ComplexValue sum = -0.5 * (up + down);
  return {sum.real(), std::fabs(sum.imag())};
}

double f_singular_model(const FParams& p, double phi, Side side) {
  validate(p);
  if (!(p.alpha < 1.0)) throw DomainError("f_singular_model: requires 0 < alpha < 1");
  const double g = std::tgamma(1.0 - p.alpha);
  if (side == Side::below) {
    const double d = kPi - 2.0 * phi;
    if (!(d > 0.0)) throw DomainError("f_singular_model: phi must be below pi/2");
    return g * std::pow(d, p.alpha - 1.0) * std::sin(0.5 * kPi * (p.mu + p.alpha));
  }
  const double d = 2.0 * phi - kPi;
  if (!(d > 0.0)) throw DomainError("f_singular_model: phi must be above pi/2");
  return -g * std::pow(d, p.alpha - 1.0) * std::sin(0.5 * kPi * (p.mu - p.alpha));
}

double f_alpha_zero_closed_form(int mu, double phi) {
  if (mu < 0) throw DomainError("f_alpha_zero_closed_form: mu must be >= 0");
  const double c = std::cos(phi);
  if (std::fabs(c) < 1e-15) throw SingularityError("f_alpha_zero_closed_form: cos(phi) = 0");
  return -std::cos((mu + 1) * phi) / (2.0 * c);
}

}  // namespace bnsum::fseries
