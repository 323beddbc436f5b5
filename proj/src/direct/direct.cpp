#include "bnsum/direct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "bnsum/error.hpp"
#include "bnsum/kernels.hpp"

namespace bnsum::direct {

namespace {

// X_l = sum_i coeff[i] J_{l + offset[i]}
struct Stencil {
  int count = 1;
  std::array<int, 3> offset{0, 0, 0};
  std::array<double, 3> coeff{1.0, 0.0, 0.0};

  int min_offset() const { return *std::min_element(offset.begin(), offset.begin() + count); }
  int max_offset() const { return *std::max_element(offset.begin(), offset.begin() + count); }
  double abs_coeff_sum() const {
    double s = 0.0;
    for (int i = 0; i < count; ++i) s += std::fabs(coeff[static_cast<std::size_t>(i)]);
    return s;
  }
  double eval(const specfun::BesselRow& row, int l) const {
    double v = 0.0;
    for (int i = 0; i < count; ++i)
      v += coeff[static_cast<std::size_t>(i)] * row.at(l + offset[static_cast<std::size_t>(i)]);
    return v;
  }
};

Stencil plain(int shift) { return Stencil{1, {shift, 0, 0}, {1.0, 0.0, 0.0}}; }
Stencil first_derivative() { return Stencil{2, {-1, 1, 0}, {0.5, -0.5, 0.0}}; }
Stencil second_derivative() { return Stencil{3, {2, -2, 0}, {0.25, 0.25, -0.5}}; }

std::pair<Stencil, Stencil> kind_stencils(DerivativeKind kind) {
  switch (kind) {
    case DerivativeKind::JJ:
      return {plain(0), plain(0)};
    case DerivativeKind::JdJ:
      return {plain(0), first_derivative()};
    case DerivativeKind::dJdJ:
      return {first_derivative(), first_derivative()};
    case DerivativeKind::JddJ:
      return {plain(0), second_derivative()};
    case DerivativeKind::dJddJ:
      return {first_derivative(), second_derivative()};
    case DerivativeKind::ddJddJ:
      return {second_derivative(), second_derivative()};
  }
  return {plain(0), plain(0)};
}

// log of (r/2)^n / n!, the bound on |J_n(r)| for n >= 0
double log_bessel_bound(double log_half_r, int n) {
  return n * log_half_r - std::lgamma(static_cast<double>(n) + 1.0);
}

struct Truncation {
  int last = 0;        // sum l = 1..last
  double tail = 0.0;   // bound on sum_{l>last}
};

Truncation choose_truncation(const Stencil& x, const Stencil& y, double a, double beta, double r,
                             double tol, int start_hint) {
  const int sx = x.min_offset();
  const int sy = y.min_offset();
  if (r == 0.0) return {std::max(3, 3 - std::min(sx, sy)), 0.0};

  const double half_r = 0.5 * r;
  const double log_half_r = std::log(half_r);
  const double log_coeffs = std::log(x.abs_coeff_sum()) + std::log(y.abs_coeff_sum());
  const double growth = std::max(a, 0.0);

  long last = static_cast<long>(std::ceil(std::exp(1.0) * half_r)) + start_hint + 10;
  for (;;) {
    if (last > kMaxTerms)
      throw ConvergenceError("sum_series: tolerance " + std::to_string(tol) +
                             " not certified within the term cap at r = " + std::to_string(r));
    const long l1 = last + 1;
    // bound on T_{l+1}/T_l for every l >= l1
    double rho = half_r * half_r / ((static_cast<double>(l1 + sx) + 1.0) * (static_cast<double>(l1 + sy) + 1.0));
    if (growth > 0.0) rho *= std::pow(1.0 + 1.0 / (static_cast<double>(l1) + beta), growth);
    if (rho <= 0.5) {
      const double log_t = a * std::log(static_cast<double>(l1) + beta) + log_coeffs +
                           log_bessel_bound(log_half_r, static_cast<int>(l1 + sx)) +
                           log_bessel_bound(log_half_r, static_cast<int>(l1 + sy));
      const double tail = std::exp(log_t) / (1.0 - rho);
      if (tail <= 0.5 * tol) return {static_cast<int>(last), tail};
    }
    last += std::max(8L, last / 8);
  }
}

EvalResult sum_stencils(DirectSummer& summer, const Stencil& x, const Stencil& y, double a,
                        double beta, double tol, int start_hint) {
  if (!(tol > 0.0)) throw DomainError("sum_series: tol must be > 0");
  if (!(beta > -1.0)) throw DomainError("sum_series: beta must exceed -1");
  if (!std::isfinite(a)) throw DomainError("sum_series: a must be finite");

  const Truncation trunc = choose_truncation(x, y, a, beta, summer.r(), tol, start_hint);
  const int n = trunc.last;
  const int top = n + std::max(x.max_offset(), y.max_offset()) + 1;
  const specfun::BesselRow& row = summer.row(top);

  std::vector<double> wv(static_cast<std::size_t>(n));
  std::vector<double> xv(static_cast<std::size_t>(n));
  std::vector<double> yv(static_cast<std::size_t>(n));
  for (int l = 1; l <= n; ++l) {
    const auto i = static_cast<std::size_t>(l - 1);
    wv[i] = a == 0.0 ? 1.0 : std::pow(static_cast<double>(l) + beta, a);
    xv[i] = x.eval(row, l);
    yv[i] = y.eval(row, l);
  }
  const kernels::DotResult dot = kernels::weighted_dot(wv.data(), xv.data(), yv.data(), wv.size());

  EvalResult out;
  out.value = dot.sum;
  out.err_est =
      trunc.tail + (16.0 + n) * std::numeric_limits<double>::epsilon() * dot.abs_sum;
  out.method = Method::oracle;
  out.work = n;
  return out;
}

}  // namespace

const char* kind_name(DerivativeKind kind) {
  switch (kind) {
    case DerivativeKind::JJ:
      return "JJ";
    case DerivativeKind::JdJ:
      return "JdJ";
    case DerivativeKind::dJdJ:
      return "dJdJ";
    case DerivativeKind::JddJ:
      return "JddJ";
    case DerivativeKind::dJddJ:
      return "dJddJ";
    case DerivativeKind::ddJddJ:
      return "ddJddJ";
  }
  return "unknown";
}

std::optional<DerivativeKind> parse_kind(std::string_view name) {
  for (DerivativeKind k : kAllKinds)
    if (name == kind_name(k)) return k;
  return std::nullopt;
}

DirectSummer::DirectSummer(double r) : r_(r) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("sum_series: r must be >= 0");
  row_ = specfun::bessel_j_row(8, r);
}

const specfun::BesselRow& DirectSummer::row(int order_max) {
  if (order_max > row_.order_max)
    row_ = specfun::bessel_j_row(std::max(order_max, row_.order_max + row_.order_max / 2), r_);
  return row_;
}

EvalResult DirectSummer::sum(const SeriesSpec& spec, double tol) {
  validate(spec);
  return sum_stencils(*this, plain(spec.m_prime), plain(spec.m), spec.a, spec.beta, tol, spec.mu());
}

EvalResult DirectSummer::sum_derivative(DerivativeKind kind, double a, double beta, double tol) {
  const auto [x, y] = kind_stencils(kind);
  return sum_stencils(*this, x, y, a, beta, tol, 2);
}

EvalResult sum_series(const SeriesSpec& spec, double r, double tol) {
  DirectSummer summer(r);
  return summer.sum(spec, tol);
}

EvalResult sum_derivative_series(DerivativeKind kind, double a, double beta, double r, double tol) {
  DirectSummer summer(r);
  return summer.sum_derivative(kind, a, beta, tol);
}

}  // namespace bnsum::direct
