#pragma once

// Ground-truth direct summation with a certified tail.
//
// Terms are summed up to an index L chosen from the bound
// |J_n(r)| <= (r/2)^n / n!: once the ratio of successive term bounds is at
// most 1/2 the remainder is bounded by a geometric series. The returned
// err_est adds a rounding allowance to that tail bound.

#include <array>
#include <optional>
#include <string_view>

#include "bnsum/series.hpp"
#include "bnsum/specfun.hpp"

namespace bnsum::direct {

inline constexpr double kDefaultTol = 1e-12;
inline constexpr long kMaxTerms = 1000000;

/// Products in sum_l (l+beta)^a X_l(r) Y_l(r), X, Y in {J_l, J_l', J_l''}.
enum class DerivativeKind { JJ, JdJ, dJdJ, JddJ, dJddJ, ddJddJ };

inline constexpr std::array<DerivativeKind, 6> kAllKinds = {
    DerivativeKind::JJ,   DerivativeKind::JdJ,   DerivativeKind::dJdJ,
    DerivativeKind::JddJ, DerivativeKind::dJddJ, DerivativeKind::ddJddJ};

const char* kind_name(DerivativeKind kind);
std::optional<DerivativeKind> parse_kind(std::string_view name);

/// Throws ConvergenceError if tol cannot be certified within kMaxTerms.
EvalResult sum_series(const SeriesSpec& spec, double r, double tol = kDefaultTol);

/// J'_l = (J_{l-1} - J_{l+1})/2, J''_l = (J_{l+2} + J_{l-2} - 2 J_l)/4.
EvalResult sum_derivative_series(DerivativeKind kind, double a, double beta, double r,
                                 double tol = kDefaultTol);

/// Reuses one Bessel row for many sums at the same r. Not thread-safe; use
/// one instance per thread.
class DirectSummer {
 public:
  explicit DirectSummer(double r);

  double r() const { return r_; }
  EvalResult sum(const SeriesSpec& spec, double tol = kDefaultTol);
  EvalResult sum_derivative(DerivativeKind kind, double a, double beta, double tol = kDefaultTol);

  /// Read access to the cached row, extended to at least order_max.
  const specfun::BesselRow& row(int order_max);

 private:
  double r_;
  specfun::BesselRow row_;
};

}  // namespace bnsum::direct
