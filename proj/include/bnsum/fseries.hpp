#pragma once

// Amplitude function of the integral representations
//
//   F(phi) = sum_{l>=1} (-1)^l cos(phi (mu + 2l)) / (l + beta)^alpha
//          = Re(-e^{i phi (mu+2)} Phi(-e^{2 i phi}, alpha, beta + 1)),
//
// with alpha = -a > 0. F(pi - phi) = (-1)^mu F(phi). At phi = pi/2 it is
// finite for alpha > 1 and blows up like |pi/2 - phi|^{alpha-1} (log for
// alpha = 1) otherwise.

#include "bnsum/specfun.hpp"

namespace bnsum::fseries {

struct FParams {
  double alpha = 1.0;
  double beta = 0.0;
  int mu = 0;
};

/// Throws DomainError unless alpha > 0, beta > -1, mu >= 0.
void validate(const FParams& p);

double f_eval(const FParams& p, double phi);

struct SymmetrizedValue {
  double value = 0.0;
  double imag_residue = 0.0;  // |Im| of the conjugate-symmetric sum
};

/// Evaluates both conjugate terms separately; the imaginary part of their
/// sum must vanish and is reported as a diagnostic.
SymmetrizedValue f_eval_symmetrized(const FParams& p, double phi);

enum class Side { below, above };

/// Leading singular behaviour near pi/2 for 0 < alpha < 1:
///   below: Gamma(1-alpha) (pi - 2 phi)^{alpha-1} sin(pi (mu + alpha) / 2)
///   above: -Gamma(1-alpha) (2 phi - pi)^{alpha-1} sin(pi (mu - alpha) / 2)
double f_singular_model(const FParams& p, double phi, Side side);

/// -cos((mu+1) phi) / (2 cos phi). The representation theorem fails at
/// alpha = 0, so this is a fixture only.
double f_alpha_zero_closed_form(int mu, double phi);

/// F at fixed parameters, evaluated through the offset w = pi/2 - phi so
/// that nodes close to the singular point keep full relative precision.
class FEvaluator {
 public:
  explicit FEvaluator(const FParams& p);

  const FParams& params() const { return params_; }

  /// F(pi/2 - w), w in [-pi/2, pi/2].
  double at_offset(double w) const;
  double operator()(double phi) const { return at_offset(0.5 * specfun::kPi - phi); }

 private:
  FParams params_;
  specfun::LerchUnitCircle lerch_;
};

}  // namespace bnsum::fseries
