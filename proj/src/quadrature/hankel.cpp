#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <complex>
#include <string>

#include "bnsum/error.hpp"
#include "bnsum/fseries.hpp"
#include "bnsum/quadrature.hpp"
#include "bnsum/specfun.hpp"
#include "panels.hpp"

namespace bnsum::quadrature {

namespace {

using Complex = std::complex<double>;
using specfun::kPi;

struct Prepared {
  SeriesSpec spec;  // canonical, nu >= 0
  double alpha;
  detail::Layout base;
};

Prepared prepare(const SeriesSpec& in, double r, const QuadratureConfig& cfg, const char* who) {
  validate(in);
  validate(cfg);
  if (!(in.a < 0.0))
    throw DomainError(std::string(who) + ": requires a < 0; use eval_lifted for a >= 0");
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError(std::string(who) + ": r must be >= 0");
  Prepared p{in.canonical(), -in.a, {}};
  const double periods = std::max(1.0, r / kPi);
  p.base.panels = std::max(
      2, static_cast<int>(std::ceil(cfg.oscillation_panels_per_period / 4.0 * periods)));
  p.base.q = std::max(1.0, cfg.grading_exponent / p.alpha);
  return p;
}

bool accepted(double diff, double value, const QuadratureConfig& cfg) {
  return diff <= std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(value));
}

// Doubles the panel count until two successive results agree. integrate(layout,
// nodes) returns the already scaled value; T is double or complex.
template <class T, class Integrate>
T refine(Integrate&& integrate, const Prepared& p, const QuadratureConfig& cfg, const char* who,
         double& err, std::int64_t& nodes) {
  detail::Layout layout = p.base;
  T coarse = integrate(layout, nodes);
  for (;;) {
    layout.panels *= 2;
    if (layout.panels > cfg.max_panels)
      throw ConvergenceError(std::string(who) + ": tolerance not met within max_panels");
    T fine = integrate(layout, nodes);
    const double diff = std::abs(fine - coarse);
    if (accepted(diff, std::abs(fine), cfg)) {
      err = diff;
      return fine;
    }
    coarse = fine;
  }
}

double sign_of(int m_prime) { return (m_prime % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

void validate(const QuadratureConfig& cfg) {
  if (!(cfg.abs_tol > 0.0) || !(cfg.rel_tol > 0.0))
    throw DomainError("QuadratureConfig: tolerances must be > 0");
  if (cfg.max_panels < 8) throw DomainError("QuadratureConfig: max_panels must be >= 8");
  if (!(cfg.grading_exponent > 0.0))
    throw DomainError("QuadratureConfig: grading_exponent must be > 0");
  if (cfg.oscillation_panels_per_period < 4)
    throw DomainError("QuadratureConfig: oscillation_panels_per_period must be >= 4");
}

const GaussRule& gauss_legendre20() {
  static const GaussRule rule = [] {
    using Gauss = boost::math::quadrature::gauss<double, 20>;
    const auto& x = Gauss::abscissa();
    const auto& w = Gauss::weights();
    GaussRule out;
    for (std::size_t i = x.size(); i-- > 0;) {
      out.nodes.push_back(-x[i]);
      out.weights.push_back(w[i]);
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0.0) continue;  // odd rules carry the centre once
      out.nodes.push_back(x[i]);
      out.weights.push_back(w[i]);
    }
    return out;
  }();
  return rule;
}

EvalResult eval_hankel(const SeriesSpec& spec, double r, const QuadratureConfig& cfg) {
  const Prepared p = prepare(spec, r, cfg, "eval_hankel");
  const fseries::FEvaluator f({p.alpha, p.spec.beta, p.spec.mu()});
  const int nu = p.spec.nu();
  // integrand is even about pi/2, so S = (2 (-1)^{m'} / pi) int_0^{pi/2}
  const double pref = 2.0 * sign_of(p.spec.m_prime) / kPi;
  auto integrand = [&](double w) { return specfun::bessel_j(nu, 2.0 * r * std::sin(w)) * f.at_offset(w); };
  auto integrate = [&](const detail::Layout& layout, std::int64_t& nodes) {
    return pref * detail::graded_integral<double>(integrand, 0.5 * kPi, layout, nodes);
  };
  EvalResult out;
  out.method = Method::hankel;
  out.value = refine<double>(integrate, p, cfg, "eval_hankel", out.err_est, out.work);
  return out;
}

EvalResult eval_hankel_full(const SeriesSpec& spec, double r, const QuadratureConfig& cfg) {
  const Prepared p = prepare(spec, r, cfg, "eval_hankel_full");
  const fseries::FEvaluator f({p.alpha, p.spec.beta, p.spec.mu()});
  const int nu = p.spec.nu();
  const double pref = sign_of(p.spec.m_prime) / kPi;
  auto below = [&](double w) { return specfun::bessel_j(nu, 2.0 * r * std::sin(w)) * f.at_offset(w); };
  auto above = [&](double w) { return specfun::bessel_j(nu, -2.0 * r * std::sin(w)) * f.at_offset(-w); };
  auto integrate = [&](const detail::Layout& layout, std::int64_t& nodes) {
    return pref * (detail::graded_integral<double>(below, 0.5 * kPi, layout, nodes) +
                   detail::graded_integral<double>(above, 0.5 * kPi, layout, nodes));
  };
  EvalResult out;
  out.method = Method::hankel;
  out.value = refine<double>(integrate, p, cfg, "eval_hankel_full", out.err_est, out.work);
  return out;
}

EvalResult eval_exp2d(const SeriesSpec& spec, double r, const QuadratureConfig& cfg) {
  const Prepared p = prepare(spec, r, cfg, "eval_exp2d");
  const fseries::FEvaluator f({p.alpha, p.spec.beta, p.spec.mu()});
  const int nu = p.spec.nu();
  const int mu = p.spec.mu();
  const GaussRule& g = gauss_legendre20();
  std::int64_t inner_nodes = 0;

  // int_0^{pi/2} e^{2 i r c cos theta} cos(nu theta) dtheta, c = cos phi;
  // panels no wider than a quarter period of either factor.
  auto inner = [&](double c) {
    const int panels =
        1 + static_cast<int>(std::ceil(2.0 * (2.0 * r * std::fabs(c) + nu) / kPi));
    const double h = 0.5 * kPi / panels;
    Complex total{0.0, 0.0};
    for (int k = 0; k < panels; ++k) {
      const double mid = (k + 0.5) * h;
      Complex acc{0.0, 0.0};
      for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const double theta = mid + 0.5 * h * g.nodes[i];
        acc += g.weights[i] * std::cos(nu * theta) * std::polar(1.0, 2.0 * r * c * std::cos(theta));
      }
      total += 0.5 * h * acc;
    }
    inner_nodes += static_cast<std::int64_t>(panels) * static_cast<std::int64_t>(g.nodes.size());
    return total;
  };
  // phi = pi/2 - w, so cos phi = sin w on both sides of pi/2
  auto below = [&](double w) { return inner(std::sin(w)) * f.at_offset(w); };
  auto above = [&](double w) { return inner(-std::sin(w)) * f.at_offset(-w); };

  static constexpr Complex kIPow[4] = {{1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};
  const Complex pref = 2.0 * kIPow[mu % 4] / (kPi * kPi);  // 2 i^{-mu} / pi^2
  auto integrate = [&](const detail::Layout& layout, std::int64_t& nodes) {
    return pref * (detail::graded_integral<Complex>(below, 0.5 * kPi, layout, nodes) +
                   detail::graded_integral<Complex>(above, 0.5 * kPi, layout, nodes));
  };
  EvalResult out;
  out.method = Method::exp2d;
  const Complex value = refine<Complex>(integrate, p, cfg, "eval_exp2d", out.err_est, out.work);
  out.value = value.real();
  out.imag_residue = std::fabs(value.imag());
  out.work += inner_nodes;
  return out;
}

}  // namespace bnsum::quadrature
