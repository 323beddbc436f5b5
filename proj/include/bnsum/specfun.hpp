#pragma once

// Real special-function kernel: gamma family, Hurwitz zeta, the Lerch
// transcendent on the unit circle and integer-order Bessel rows.
//
// All functions are pure. Internal tables are built on first use and are
// immutable afterwards, so every entry point is safe to call concurrently.

#include <complex>
#include <vector>

namespace bnsum::specfun {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kLn2 = 0.69314718055994530942;

using ComplexValue = std::complex<double>;

/// Gamma function. Throws PoleError at 0, -1, -2, ...
double gamma(double x);

/// 1/Gamma(x); entire, exactly 0 at the non-positive integers.
double reciprocal_gamma(double x);

/// sin(pi x) with exact zeros at the integers.
double sin_pi(double x);

/// Digamma psi(x). Throws PoleError at 0, -1, -2, ...
double digamma(double x);

/// Extended harmonic number H_beta = psi(beta + 1) + euler_gamma, beta > -1.
double harmonic_extended(double beta);

/// Hurwitz zeta(s, a) for a > 0, analytically continued to every s != 1.
///
/// Euler-Maclaurin with a fixed Bernoulli table B_2..B_32 after shifting the
/// base up to a + N >= 15 + |s|; for s < -4 the Hurwitz functional equation
/// is used instead because the shifted partial sum would cancel badly.
double hurwitz_zeta(double s, double a);

/// Phi(-1, s, a) = sum_{n>=0} (-1)^n (n + a)^{-s}.
/// Uses the zeta difference for s != 1 and the alternating series at s = 1.
double phi_minus_one(double s, double a);

/// Zeta-difference route: (zeta(s, a/2) - zeta(s, (a+1)/2)) / 2^s.
double phi_minus_one_zeta(double s, double a);

/// Cohen-Villegas-Zagier accelerated alternating sum, s > 0.
double phi_minus_one_alternating(double s, double a);

/// Phi(-e^{2 i phi}, alpha, v) for phi in [0, pi], alpha > 0, v > 0.
///
/// Away from phi = pi/2 this integrates the Laplace-type representation
///   (1/Gamma(alpha)) int_0^inf t^{alpha-1} e^{-t v} / (1 + e^{-t + 2 i phi}) dt
/// with a double-exponential rule. Within |2 phi - pi| <= 1 it switches to
/// the local expansion around z = 1, which resolves the branch point.
/// Throws SingularityError at phi = pi/2 when alpha <= 1.
ComplexValue lerch_unit(double phi, double alpha, double v);

/// The integral route alone (valid for any phi != pi/2).
ComplexValue lerch_unit_quadrature(double phi, double alpha, double v);

/// Direct partial sum with an asymptotic tail; an independent check route.
/// Requires |2 phi - pi| >= 1e-3.
ComplexValue lerch_unit_series(double phi, double alpha, double v);

/// Phi(z, alpha, v) on z = e^{i theta} with the zeta coefficients of the
/// local expansion precomputed, for repeated evaluation at fixed (alpha, v).
class LerchUnitCircle {
 public:
  LerchUnitCircle(double alpha, double v);

  double alpha() const { return alpha_; }
  double v() const { return v_; }

  /// Phi(e^{i theta}, alpha, v), theta in [-pi, pi], theta != 0 unless alpha > 1.
  ComplexValue at_theta(double theta) const;

  /// Phi(-e^{2 i phi}, alpha, v) at phi = pi/2 - w; keeps full precision for tiny w.
  ComplexValue at_offset(double w) const { return at_theta(-2.0 * w); }

 private:
  ComplexValue local_expansion(double theta) const;

  double alpha_;
  double v_;
  int integer_order_ = 0;   // alpha when alpha is a positive integer, else 0
  bool near_integer_ = false;
  double gamma_one_minus_alpha_ = 0.0;
  double psi_term_ = 0.0;   // psi(alpha) - psi(v) for the integer case
  std::vector<double> coeffs_;  // zeta(alpha - k, v) / k!
};

/// J_0(r) .. J_{order_max}(r).
struct BesselRow {
  int order_max = 0;
  double argument = 0.0;
  std::vector<double> values;

  double operator[](int n) const { return values[static_cast<std::size_t>(n)]; }
  /// J_n for any integer n with |n| <= order_max, using J_{-n} = (-1)^n J_n.
  double at(int n) const;
};

/// Miller backward recurrence, normalized with J_0^2 + 2 sum J_k^2 = 1.
BesselRow bessel_j_row(int order_max, double r);

/// Single value J_n(x) for any integer n and real x.
double bessel_j(int n, double x);

}  // namespace bnsum::specfun
