#include <array>
#include <cmath>
#include <string>

#include "bnsum/error.hpp"
#include "bnsum/specfun.hpp"

namespace bnsum::specfun {

namespace {

// B_{2j} / (2j)!, j = 1..16
const std::array<long double, 16>& bernoulli_over_factorial() {
  static const std::array<long double, 16> table = [] {
    const std::array<long double, 16> b = {
        1.0L / 6,
        -1.0L / 30,
        1.0L / 42,
        -1.0L / 30,
        5.0L / 66,
        -691.0L / 2730,
        7.0L / 6,
        -3617.0L / 510,
        43867.0L / 798,
        -174611.0L / 330,
        854513.0L / 138,
        -236364091.0L / 2730,
        8553103.0L / 6,
        -23749461029.0L / 870,
        8615841276005.0L / 14322,
        -7709321041217.0L / 510,
    };
    std::array<long double, 16> out{};
    long double fact = 1.0L;
    for (int j = 1; j <= 16; ++j) {
      fact *= static_cast<long double>((2 * j - 1) * (2 * j));
      out[static_cast<std::size_t>(j - 1)] = b[static_cast<std::size_t>(j - 1)] / fact;
    }
    return out;
  }();
  return table;
}

double hurwitz_euler_maclaurin(double s, double a) {
  const long double ls = s;
  const double target = 15.0 + std::fabs(s);
  const int shift = a >= target ? 0 : static_cast<int>(std::ceil(target - a));
  long double sum = 0.0L;
  for (int k = 0; k < shift; ++k) sum += std::pow(static_cast<long double>(a) + k, -ls);
  const long double x = static_cast<long double>(a) + shift;
  const long double x_pow = std::pow(x, -ls);
  sum += x * x_pow / (ls - 1.0L) + 0.5L * x_pow;

  // rising factorial s (s+1) ... (s + 2j - 2) times x^{-s-2j+1}
  const auto& bf = bernoulli_over_factorial();
  long double rising = ls;
  long double xp = x_pow / x;
  const long double inv_x2 = 1.0L / (x * x);
  for (std::size_t j = 0; j < bf.size(); ++j) {
    long double term = bf[j] * rising * xp;
    sum += term;
    if (std::fabs(term) <= 1e-21L * std::fabs(sum)) break;
    long double k = 2.0L * static_cast<long double>(j) + 1.0L;
    rising *= (ls + k) * (ls + k + 1.0L);
    xp *= inv_x2;
  }
  return static_cast<double>(sum);
}

// Hurwitz's formula, valid for 0 < a <= 1 and s < 0.
double hurwitz_functional(double s, double a) {
  const double p = 1.0 - s;
  const double phase = 0.5 * kPi * p;
  // n^{-p} below 1e-18 relative to the first term
  const long n_max = static_cast<long>(std::ceil(std::pow(1e18, 1.0 / p))) + 1;
  long double sum = 0.0L;
  for (long n = n_max; n >= 1; --n) {
    double frac = std::fmod(static_cast<double>(n) * a, 1.0);
    sum += std::cos(phase - 2.0 * kPi * frac) * std::pow(static_cast<long double>(n), -p);
  }
  const double log_pref = std::log(2.0) + std::lgamma(p) - p * std::log(2.0 * kPi);
  return static_cast<double>(std::exp(static_cast<long double>(log_pref)) * sum);
}

}  // namespace

double hurwitz_zeta(double s, double a) {
  if (!(a > 0.0) || !std::isfinite(a) || !std::isfinite(s))
    throw DomainError("hurwitz_zeta: need finite s and a > 0");
  if (s == 1.0) throw PoleError("hurwitz_zeta: pole at s = 1");
  if (s >= -4.0) return hurwitz_euler_maclaurin(s, a);

  // zeta(s, a) = zeta(s, a - j) - sum_{i=1}^{j} (a - i)^{-s}, base in (0, 1]
  double base = a;
  long double shift_sum = 0.0L;
  while (base > 1.0) {
    base -= 1.0;
    shift_sum += std::pow(static_cast<long double>(base), -static_cast<long double>(s));
  }
  return static_cast<double>(hurwitz_functional(s, base) - shift_sum);
}

double phi_minus_one_zeta(double s, double a) {
  if (!(a > 0.0)) throw DomainError("phi_minus_one: need a > 0");
  if (s == 1.0) throw PoleError("phi_minus_one_zeta: zeta route has a pole at s = 1");
  return (hurwitz_zeta(s, 0.5 * a) - hurwitz_zeta(s, 0.5 * (a + 1.0))) * std::pow(2.0, -s);
}

double phi_minus_one_alternating(double s, double a) {
  if (!(a > 0.0)) throw DomainError("phi_minus_one: need a > 0");
  if (!(s > 0.0)) throw DomainError("phi_minus_one_alternating: need s > 0");
  // Cohen, Villegas, Zagier: sum (-1)^k a_k for completely monotone a_k.
  constexpr int n = 32;
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  double acc = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    acc += c * std::pow(k + a, -s);
    b = (static_cast<double>(k + n) * static_cast<double>(k - n)) * b /
        ((k + 0.5) * (k + 1.0));
  }
  return acc / d;
}

double phi_minus_one(double s, double a) {
  if (s == 1.0) return phi_minus_one_alternating(s, a);
  return phi_minus_one_zeta(s, a);
}

}  // namespace bnsum::specfun
