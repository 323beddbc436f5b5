#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "bnsum/error.hpp"
#include "bnsum/specfun.hpp"

namespace bnsum::specfun {

namespace {

using Complex = std::complex<double>;

// |theta| below which the local expansion around z = 1 is used; the
// expansion cancels like e^{v |theta|}, so the radius shrinks for large v
double local_radius(double v) { return std::min(1.0, 5.0 / v); }
// (1 / 2 pi)^K and 5^K / K! both far below 1e-19 at K = 26
constexpr int kLocalTerms = 26;

void check_params(double alpha, double v) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw DomainError("lerch: alpha must be positive");
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("lerch: v must be positive");
}

double theta_from_phi(double phi) {
  if (!(phi >= -1e-14 && phi <= kPi + 1e-14))
    throw DomainError("lerch_unit: phi must lie in [0, pi]");
  return 2.0 * phi - kPi;
}

// 1 - e^{-t + i theta} without cancellation for small t and theta
Complex one_minus_exp(double t, double theta) {
  const double em1 = std::expm1(-t);
  const double s = std::sin(0.5 * theta);
  const double re = -(em1 * std::cos(theta) - 2.0 * s * s);
  const double im = -(std::exp(-t) * std::sin(theta));
  return {re, im};
}

// (1/Gamma(alpha)) int_0^inf t^{alpha-1} e^{-v t} / (1 - e^{i theta} e^{-t}) dt
// using the exp-sinh map t = exp(pi/2 sinh x).
Complex lerch_quadrature_theta(double theta, double alpha, double v) {
  const double half_pi = 0.5 * kPi;
  auto integrand = [&](double x) -> Complex {
    const double sh = half_pi * std::sinh(x);
    if (sh > 709.0) return {0.0, 0.0};
    const double t = std::exp(sh);
    const double log_mag = alpha * sh - v * t;
    if (log_mag < -745.0) return {0.0, 0.0};
    const double jac = half_pi * std::cosh(x);
    return std::exp(log_mag) * jac / one_minus_exp(t, theta);
  };

  // x range: walk outward from 0 until the integrand is negligible
  constexpr double h0 = 0.5;
  Complex sum = integrand(0.0);
  double scale = std::abs(sum);
  int k_hi = 0;
  int k_lo = 0;
  for (int k = 1, quiet = 0; k < 200 && quiet < 3; ++k) {
    Complex f = integrand(k * h0);
    sum += f;
    scale = std::max(scale, std::abs(f));
    quiet = std::abs(f) < 1e-22 * scale ? quiet + 1 : 0;
    k_hi = k;
  }
  for (int k = 1, quiet = 0; k < 200 && quiet < 3; ++k) {
    Complex f = integrand(-k * h0);
    sum += f;
    scale = std::max(scale, std::abs(f));
    quiet = (std::abs(f) < 1e-22 * scale && k * h0 > 1.0) ? quiet + 1 : 0;
    k_lo = k;
  }
  const double x_lo = -k_lo * h0;
  const double x_hi = k_hi * h0;

  Complex estimate = sum * h0;
  double h = h0;
  for (int level = 1; level <= 12; ++level) {
    h *= 0.5;
    Complex odd{0.0, 0.0};
    for (double x = x_lo + h; x < x_hi; x += 2.0 * h) odd += integrand(x);
    sum += odd;
    Complex next = sum * h;
    const double diff = std::abs(next - estimate);
    estimate = next;
    if (level >= 3 && diff <= 1e-14 * std::abs(estimate)) break;
    if (level == 12 && diff > 1e-9 * std::abs(estimate))
      throw ConvergenceError("lerch_unit_quadrature: no convergence at theta = " +
                             std::to_string(theta));
  }
  return estimate * reciprocal_gamma(alpha);
}

}  // namespace

LerchUnitCircle::LerchUnitCircle(double alpha, double v) : alpha_(alpha), v_(v) {
  check_params(alpha, v);
  const double n = std::nearbyint(alpha);
  const double gap = std::fabs(alpha - n);
  if (n >= 1.0 && gap <= 1e-13 * n) {
    integer_order_ = static_cast<int>(n);
    psi_term_ = digamma(n) - digamma(v);
  } else if (n >= 1.0 && gap < 1e-6) {
    // the singular term and the pole of zeta(alpha - k) nearly cancel
    near_integer_ = true;
    return;
  } else {
    gamma_one_minus_alpha_ = std::tgamma(1.0 - alpha);
  }
  coeffs_.resize(kLocalTerms);
  double factorial = 1.0;
  for (int k = 0; k < kLocalTerms; ++k) {
    if (k > 0) factorial *= k;
    if (integer_order_ != 0 && k == integer_order_ - 1) {
      coeffs_[static_cast<std::size_t>(k)] = 0.0;
      continue;
    }
    coeffs_[static_cast<std::size_t>(k)] = hurwitz_zeta(alpha - k, v) / factorial;
  }
}

ComplexValue LerchUnitCircle::local_expansion(double theta) const {
  const Complex log_z{0.0, theta};
  Complex poly{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) poly = poly * log_z + *it;

  Complex singular{0.0, 0.0};
  if (theta != 0.0) {
    const Complex log_inv_z{0.0, -theta};
    if (integer_order_ == 0) {
      singular = gamma_one_minus_alpha_ * std::pow(log_inv_z, alpha_ - 1.0);
    } else {
      const int p = integer_order_ - 1;
      double factorial = 1.0;
      for (int i = 2; i <= p; ++i) factorial *= i;
      Complex power{1.0, 0.0};
      for (int i = 0; i < p; ++i) power *= log_z;
      singular = power * (psi_term_ - std::log(log_inv_z)) / factorial;
    }
  }
  const Complex z_pow = std::polar(1.0, -v_ * theta);
  return z_pow * (singular + poly);
}

ComplexValue LerchUnitCircle::at_theta(double theta) const {
  if (!(theta >= -kPi - 1e-14 && theta <= kPi + 1e-14))
    throw DomainError("LerchUnitCircle: theta must lie in [-pi, pi]");
  if (theta == 0.0 && alpha_ <= 1.0)
    throw SingularityError("lerch_unit: singular at phi = pi/2 for alpha <= 1");
  if (near_integer_) {
    if (theta == 0.0) return {hurwitz_zeta(alpha_, v_), 0.0};
    return lerch_quadrature_theta(theta, alpha_, v_);
  }
  if (std::fabs(theta) <= local_radius(v_)) return local_expansion(theta);
  return lerch_quadrature_theta(theta, alpha_, v_);
}

ComplexValue lerch_unit(double phi, double alpha, double v) {
  check_params(alpha, v);
  const double theta = theta_from_phi(phi);
  if (std::fabs(theta) <= local_radius(v)) return LerchUnitCircle(alpha, v).at_theta(theta);
  return lerch_quadrature_theta(theta, alpha, v);
}

ComplexValue lerch_unit_quadrature(double phi, double alpha, double v) {
  check_params(alpha, v);
  const double theta = theta_from_phi(phi);
  if (theta == 0.0)
    throw SingularityError("lerch_unit_quadrature: integrand is singular at phi = pi/2");
  return lerch_quadrature_theta(theta, alpha, v);
}

ComplexValue lerch_unit_series(double phi, double alpha, double v) {
  check_params(alpha, v);
  const double theta = theta_from_phi(phi);
  const double dist = std::fabs(theta);
  if (dist < 1e-3) throw DomainError("lerch_unit_series: too close to phi = pi/2");

  // Phi(z, a, v) = sum_{n<N} z^n (n+v)^{-a} + z^N Phi(z, a, v + N); the tail
  // uses Watson's lemma on 1/(1 - z e^{-t}) = sum g_k t^k, which converges
  // for |t| < |theta|, so the tail is accurate once |theta| (v + N) >~ 40.
  constexpr int kTail = 44;
  const long n_direct = std::max(0L, static_cast<long>(std::ceil(44.0 / dist - v)));
  Complex sum{0.0, 0.0};
  for (long n = n_direct - 1; n >= 0; --n)
    sum += std::polar(std::pow(static_cast<double>(n) + v, -alpha), n * theta);

  const Complex z = std::polar(1.0, theta);
  const double sh = std::sin(0.5 * theta);
  const Complex one_minus_z{2.0 * sh * sh, -std::sin(theta)};
  std::array<Complex, kTail> g{};
  g[0] = 1.0 / one_minus_z;
  for (int k = 1; k < kTail; ++k) {
    Complex acc{0.0, 0.0};
    double inv_fact = 1.0;
    for (int j = 1; j <= k; ++j) {
      inv_fact /= j;
      acc += ((j % 2) ? -inv_fact : inv_fact) * g[static_cast<std::size_t>(k - j)];
    }
    g[static_cast<std::size_t>(k)] = z * acc / one_minus_z;
  }
  const double big_v = v + static_cast<double>(n_direct);
  Complex tail{0.0, 0.0};
  double pochhammer = 1.0;
  double v_pow = std::pow(big_v, -alpha);
  double last = INFINITY;
  double before_last = INFINITY;
  for (int k = 0; k < kTail; ++k) {
    Complex term = g[static_cast<std::size_t>(k)] * (pochhammer * v_pow);
    const double size = std::abs(term);
    // asymptotic series turned around; compare against two terms because
    // every other g_k vanishes at z = -1
    if (size > std::max(last, before_last)) break;
    tail += term;
    before_last = last;
    last = size;
    pochhammer *= alpha + k;
    v_pow /= big_v;
  }
  return sum + std::polar(1.0, static_cast<double>(n_direct) * theta) * tail;
}

}  // namespace bnsum::specfun
