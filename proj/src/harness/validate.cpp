#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "bnsum/asymptotics.hpp"
#include "bnsum/direct.hpp"
#include "bnsum/fseries.hpp"
#include "bnsum/harness.hpp"
#include "bnsum/kernels.hpp"
#include "bnsum/quadrature.hpp"
#include "bnsum/specfun.hpp"

namespace bnsum::harness {

namespace {

using asymptotics::PhaseConvention;
using asymptotics::Regime;
using asymptotics::TableVariant;
using direct::DerivativeKind;
using specfun::kEulerGamma;
using specfun::kLn2;
using specfun::kPi;

using CheckFn = std::function<Check()>;

// Accumulates the worst residual of a check against a fixed tolerance.
struct Worst {
  double residual = 0.0;
  std::string where;

  void see(double value, const std::string& label) {
    if (!(value <= residual) || std::isnan(value)) {
      residual = std::isnan(value) ? INFINITY : value;
      where = label;
    }
  }
  Check check(std::string name, double tolerance) const {
    return {std::move(name), residual <= tolerance, std::isfinite(residual) ? residual : 1e300,
            tolerance, where.empty() ? "" : "worst at " + where};
  }
};

std::string label(std::initializer_list<std::pair<const char*, double>> items) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : items) {
    os << (first ? "" : " ") << k << '=' << v;
    first = false;
  }
  return os.str();
}

double rel(double got, double want) {
  return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}

// ---- kernel ----------------------------------------------------------------

std::vector<CheckFn> kernel_checks() {
  std::vector<CheckFn> c;
  c.push_back([] {
    Worst w;
    w.see(rel(specfun::gamma(1.0), 1.0), "x=1");
    w.see(rel(specfun::gamma(0.5), std::sqrt(kPi)), "x=0.5");
    w.see(rel(specfun::gamma(5.0), 24.0), "x=5");
    return w.check("gamma spot values", 1e-13);
  });
  c.push_back([] {
    Worst w;
    w.see(std::fabs(specfun::reciprocal_gamma(0.0)), "x=0");
    w.see(std::fabs(specfun::reciprocal_gamma(-1.0)), "x=-1");
    w.see(std::fabs(specfun::reciprocal_gamma(2.0) - 1.0), "x=2");
    for (double x : {-3.7, -1.5, -0.25, 0.1, 0.75, 3.3, 12.5, 40.2})
      w.see(std::fabs(specfun::reciprocal_gamma(x) * specfun::gamma(x) - 1.0), label({{"x", x}}));
    return w.check("reciprocal gamma zeros and product identity", 1e-12);
  });
  c.push_back([] {
    Worst w;
    w.see(std::fabs(specfun::digamma(1.0) + kEulerGamma), "x=1");
    w.see(std::fabs(specfun::digamma(2.0) - 1.0 + kEulerGamma), "x=2");
    w.see(std::fabs(specfun::digamma(0.5) + kEulerGamma + 2.0 * kLn2), "x=0.5");
    w.see(std::fabs(specfun::harmonic_extended(0.0)), "H_0");
    w.see(std::fabs(specfun::harmonic_extended(1.0) - 1.0), "H_1");
    w.see(std::fabs(specfun::harmonic_extended(0.5) - (2.0 - 2.0 * kLn2)), "H_0.5");
    return w.check("digamma and harmonic spot values", 1e-12);
  });
  c.push_back([] {
    Worst w;
    w.see(rel(specfun::hurwitz_zeta(2.0, 1.0), kPi * kPi / 6.0), "zeta(2,1)");
    for (double a : {0.5, 1.0, 2.0})
      w.see(std::fabs(specfun::hurwitz_zeta(0.0, a) - (0.5 - a)), label({{"zeta(0,a) a", a}}));
    for (double s : {1.5, 2.0, 3.5, 0.5, -1.5, -6.5})
      for (double a : {0.3, 1.0, 2.5}) {
        const double lhs = specfun::hurwitz_zeta(s, a) - specfun::hurwitz_zeta(s, a + 1.0);
        w.see(rel(lhs, std::pow(a, -s)), label({{"shift s", s}, {"a", a}}));
      }
    return w.check("hurwitz zeta values and shift identity", 1e-11);
  });
  c.push_back([] {
    Worst w;
    w.see(std::fabs(specfun::phi_minus_one(1.0, 1.0) - kLn2), "Phi(-1,1,1)");
    w.see(std::fabs(specfun::phi_minus_one(2.0, 1.0) - kPi * kPi / 12.0), "Phi(-1,2,1)");
    w.see(std::fabs(specfun::phi_minus_one(3.0, 1.0) - 0.75 * specfun::hurwitz_zeta(3.0, 1.0)),
          "Phi(-1,3,1)");
    for (double s : {0.5, 1.5, 2.0, 3.0})
      for (double a : {0.5, 1.0, 2.0})
        w.see(std::fabs(specfun::phi_minus_one_zeta(s, a) - specfun::phi_minus_one_alternating(s, a)),
              label({{"s", s}, {"a", a}}));
    return w.check("Phi(-1,s,a) values and route agreement", 1e-10);
  });
  c.push_back([] {
    Worst w;
    for (double alpha : {0.5, 1.0, 1.5, 2.0, 3.0})
      for (double v : {1.0, 1.5, 4.0})
        for (double phi : {0.2, 0.9, 1.3, 1.55, 1.6, 2.2, 2.9}) {
          const auto main = specfun::lerch_unit(phi, alpha, v);
          const auto quad = specfun::lerch_unit_quadrature(phi, alpha, v);
          const auto series = specfun::lerch_unit_series(phi, alpha, v);
          const std::string at = label({{"alpha", alpha}, {"v", v}, {"phi", phi}});
          w.see(std::abs(main - quad) / std::abs(main), at + " quadrature");
          w.see(std::abs(main - series) / std::abs(main), at + " series");
          const std::complex<double> z = -std::polar(1.0, 2.0 * phi);
          const auto shifted = specfun::lerch_unit(phi, alpha, v + 1.0);
          w.see(std::abs(main - (z * shifted + std::pow(v, -alpha))) / std::abs(main), at + " shift");
        }
    for (double phi : {0.3, 0.8, 1.2}) {
      const auto e2 = std::polar(1.0, 2.0 * phi);
      const auto want = std::conj(e2) * std::log(1.0 + e2);
      w.see(std::abs(specfun::lerch_unit(phi, 1.0, 1.0) - want) / std::abs(want),
            label({{"log series phi", phi}}));
    }
    return w.check("Lerch unit circle routes, shift identity, log closed form", 1e-10);
  });
  c.push_back([] {
    Worst w;
    for (double r = 0.5; r <= 50.0; r += 0.5) {
      const auto row = specfun::bessel_j_row(static_cast<int>(r) + 60, r);
      double norm = row[0] * row[0];
      for (int k = 1; k <= row.order_max; ++k) norm += 2.0 * row[k] * row[k];
      w.see(std::fabs(norm - 1.0), label({{"normalisation r", r}}));
      for (int l = 1; l < row.order_max; ++l) {
        const double lhs = row[l - 1] + row[l + 1];
        const double rhs = 2.0 * l / r * row[l];
        const double scale = std::max({std::fabs(lhs), std::fabs(rhs), 1e-300});
        if (scale > 1e-250) w.see(std::fabs(lhs - rhs) / scale, label({{"recurrence r", r}, {"l", l}}));
      }
      for (int l = 0; l <= row.order_max; ++l) {
        const double bound = std::exp(l * std::log(0.5 * r) - std::lgamma(l + 1.0));
        if (std::fabs(row[l]) > bound * (1.0 + 1e-12) + 1e-300) w.see(1.0, label({{"bound r", r}, {"l", l}}));
      }
    }
    return w.check("Bessel rows: normalisation, recurrence, power bound", 1e-11);
  });
  c.push_back([] {
    Worst w;
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> alpha_d(0.2, 3.0), beta_d(-0.9, 2.0), phi_d(0.05, 1.5);
    std::uniform_int_distribution<int> mu_d(0, 6);
    for (int i = 0; i < 200; ++i) {
      const fseries::FParams p{alpha_d(rng), beta_d(rng), mu_d(rng)};
      const double phi = phi_d(rng);
      const double sign = p.mu % 2 == 0 ? 1.0 : -1.0;
      const double lhs = fseries::f_eval(p, kPi - phi);
      const double rhs = sign * fseries::f_eval(p, phi);
      w.see(std::fabs(lhs - rhs) / std::max(1.0, std::fabs(rhs)), label({{"sample", i}}));
    }
    return w.check("amplitude parity under phi -> pi - phi", 1e-9);
  });
  c.push_back([] {
    Worst w;
    for (double alpha : {0.5, 1.0, 2.5})
      for (int mu : {0, 1, 3})
        for (double phi : {0.1, 0.7, 1.4, 1.7, 2.8}) {
          const auto s = fseries::f_eval_symmetrized({alpha, 0.5, mu}, phi);
          w.see(s.imag_residue, label({{"alpha", alpha}, {"mu", mu}, {"phi", phi}}));
        }
    return w.check("amplitude realness of the symmetrised form", 1e-10);
  });
  c.push_back([] {
    Worst w;
    for (double alpha : {1.5, 2.0, 3.5})
      for (double beta : {0.0, 0.5})
        for (int mu : {0, 1, 2, 3}) {
          const double want =
              std::cos(0.5 * kPi * mu) * specfun::hurwitz_zeta(alpha, beta + 1.0);
          const double got = fseries::f_eval({alpha, beta, mu}, 0.5 * kPi);
          w.see(std::fabs(got - want), label({{"alpha", alpha}, {"beta", beta}, {"mu", mu}}));
        }
    return w.check("amplitude at pi/2 equals cos(pi mu/2) zeta(alpha, beta+1)", 1e-9);
  });
  c.push_back([] {
    Worst w;
    const fseries::FParams p{0.5, 0.0, 0};
    const double d = 1e-3;
    for (auto side : {fseries::Side::below, fseries::Side::above}) {
      const double phi = side == fseries::Side::below ? 0.5 * kPi - d : 0.5 * kPi + d;
      const double ratio = fseries::f_eval(p, phi) / fseries::f_singular_model(p, phi, side);
      w.see(std::fabs(ratio - 1.0), side == fseries::Side::below ? "below" : "above");
    }
    return w.check("singular model ratio at distance 1e-3", 0.1);
  });
  c.push_back([] {
    Worst w;
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    for (std::size_t n : {0u, 1u, 7u, 8u, 33u, 1000u}) {
      std::vector<double> a(n), b(n), c2(n);
      for (std::size_t i = 0; i < n; ++i) {
        a[i] = g(rng);
        b[i] = g(rng);
        c2[i] = g(rng);
      }
      const auto ref = kernels::scalar::weighted_dot(a.data(), b.data(), c2.data(), n);
      const double ref_dot = kernels::scalar::dot(a.data(), b.data(), n);
      double abs_dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) abs_dot += std::fabs(a[i] * b[i]);
      for (auto isa : {kernels::Isa::avx2, kernels::Isa::neon}) {
        if (!kernels::isa_available(isa)) continue;
        const bool avx = isa == kernels::Isa::avx2;
        const auto got = avx ? kernels::avx2::weighted_dot(a.data(), b.data(), c2.data(), n)
                             : kernels::neon::weighted_dot(a.data(), b.data(), c2.data(), n);
        const double got_dot =
            avx ? kernels::avx2::dot(a.data(), b.data(), n) : kernels::neon::dot(a.data(), b.data(), n);
        const double scale = std::max(ref.abs_sum, 1e-300);
        const std::string at = std::string(kernels::isa_name(isa)) + " n=" + std::to_string(n);
        w.see(std::fabs(got.sum - ref.sum) / scale, at);
        w.see(std::fabs(got.abs_sum - ref.abs_sum) / scale, at + " abs");
        w.see(std::fabs(got_dot - ref_dot) / std::max(abs_dot, 1e-300), at + " dot");
      }
    }
    return w.check("SIMD kernels match the scalar reference", 1e-13);
  });
  return c;
}

// ---- representations -------------------------------------------------------

struct GridPoint {
  SeriesSpec spec;
  double r;
};

std::vector<GridPoint> hankel_grid(double r_max) {
  std::vector<GridPoint> g;
  for (double a : {-2.5, -1.5, -1.0, -0.5})
    for (double beta : {0.0, 0.5, 1.0})
      for (auto [m, mp] : {std::pair{0, 0}, std::pair{1, 0}, std::pair{2, 1}})
        for (double r : {1.0, 5.0, 10.0, 30.0})
          if (r <= r_max) g.push_back({{a, beta, m, mp}, r});
  return g;
}

std::string spec_label(const GridPoint& p) {
  return label({{"a", p.spec.a}, {"beta", p.spec.beta}, {"m", p.spec.m}, {"m'", p.spec.m_prime}, {"r", p.r}});
}

// relative residual with an absolute floor: |x - y| / max(|y|, floor)
Check grid_check(const std::string& name, const std::vector<GridPoint>& grid,
                 const std::function<EvalResult(const GridPoint&)>& eval, double floor,
                 double tolerance, double* max_imag = nullptr) {
  std::vector<double> residual(grid.size());
  std::vector<double> imag(grid.size(), 0.0);
  parallel_for(grid.size(), [&](std::size_t i) {
    const double oracle = direct::sum_series(grid[i].spec, grid[i].r).value;
    const EvalResult got = eval(grid[i]);
    residual[i] = std::fabs(got.value - oracle) / std::max(std::fabs(oracle), floor);
    if (got.imag_residue) imag[i] = *got.imag_residue;
  });
  Worst w;
  for (std::size_t i = 0; i < grid.size(); ++i) w.see(residual[i], spec_label(grid[i]));
  if (max_imag) *max_imag = *std::max_element(imag.begin(), imag.end());
  Check c = w.check(name, tolerance);
  c.detail += " (" + std::to_string(grid.size()) + " points)";
  return c;
}

std::vector<CheckFn> representation_checks() {
  std::vector<CheckFn> c;
  c.push_back([] {
    return grid_check("oracle vs Hankel quadrature", hankel_grid(30.0),
                      [](const GridPoint& p) { return quadrature::eval_hankel(p.spec, p.r); }, 1e-2,
                      1e-6);
  });
  c.push_back([] {
    double imag = 0.0;
    Check k = grid_check("oracle vs 2D exponential quadrature (r <= 10)", hankel_grid(10.0),
                         [](const GridPoint& p) { return quadrature::eval_exp2d(p.spec, p.r); }, 1e-3,
                         1e-5, &imag);
    k.detail += "; max imaginary residue " + format_double(imag);
    if (imag > 1e-8) k.pass = false;
    return k;
  });
  c.push_back([] {
    std::vector<GridPoint> g;
    for (double a : {0.0, 0.5, 1.0, 2.0})
      for (double beta : {0.0, 0.5, 1.0})
        for (auto [m, mp] : {std::pair{0, 0}, std::pair{1, 0}, std::pair{2, 1}})
          for (double r : {2.0, 10.0, 30.0}) g.push_back({{a, beta, m, mp}, r});
    return grid_check("oracle vs lifted recursion", g,
                      [](const GridPoint& p) { return quadrature::eval_lifted(p.spec, p.r); }, 0.1,
                      1e-5);
  });
  c.push_back([] {
    Worst w;
    for (const SeriesSpec& s : {SeriesSpec{-0.5, 0.0, 0, 0}, SeriesSpec{-1.0, 0.5, 1, 0},
                                SeriesSpec{-2.5, 1.0, 2, 1}, SeriesSpec{-1.5, 0.0, 3, 0}})
      for (double r : {1.0, 7.5}) {
        const double half = quadrature::eval_hankel(s, r).value;
        const double full = quadrature::eval_hankel_full(s, r).value;
        w.see(std::fabs(half - full), label({{"a", s.a}, {"m", s.m}, {"r", r}}));
      }
    return w.check("half-range and full-range Hankel integrals agree", 1e-9);
  });
  c.push_back([] {
    Worst w;
    w.see(std::fabs(quadrature::eval_hankel({-1.5, 0.5, 1, 0}, 0.0).value), "hankel nu=1");
    w.see(std::fabs(quadrature::eval_hankel({-0.5, 0.0, 1, 1}, 0.0).value), "hankel nu=0");
    w.see(std::fabs(quadrature::eval_exp2d({-2.0, 0.0, 2, 0}, 0.0).value), "exp2d nu=2");
    w.see(std::fabs(quadrature::eval_exp2d({-0.5, 0.0, 0, 0}, 0.0).value), "exp2d nu=0");
    w.see(std::fabs(quadrature::eval_lifted({0.0, 0.5, 2, 0}, 0.0).value), "lifted");
    return w.check("integral routes vanish at r = 0", 1e-10);
  });
  return c;
}

// ---- asymptotics -----------------------------------------------------------

double oracle_at(const SeriesSpec& s, double r) { return direct::sum_series(s, r).value; }

double form_envelope(const std::function<double(double)>& oracle,
                     const asymptotics::AsymptoticForm& form, double r_lo, double r_hi) {
  const auto windows = window_envelopes(
      [&](double r) { return r * (oracle(r) - asymptotics::eval_form(form, r)); }, r_lo, r_hi,
      r_hi / r_lo, 0.05);
  return windows.front().envelope;
}

struct TableCase {
  DerivativeKind kind;
  double a;
  double beta;
};

std::vector<TableCase> table_cases() {
  std::vector<TableCase> out;
  for (double a : {-0.5, 0.5, -1.0, -1.5, -2.0})
    for (double beta : {0.0, 0.5})
      for (DerivativeKind k : direct::kAllKinds) out.push_back({k, a, beta});
  return out;
}

// r^p |oracle - form| with p the order of the form, so that the envelope of
// a correct leading form decreases.
std::vector<Window> table_windows(const TableCase& tc, TableVariant variant) {
  const Regime regime = asymptotics::regime_of(tc.a);
  const auto form = asymptotics::derivative_series_form(tc.kind, regime, tc.a, tc.beta, variant);
  const double p = regime == Regime::above_minus_one ? -tc.a : 1.0;
  return window_envelopes(
      [&](double r) {
        const double v = direct::sum_derivative_series(tc.kind, tc.a, tc.beta, r).value;
        return std::pow(r, p) * (v - asymptotics::eval_form(form, r));
      },
      100.0, 600.0, std::pow(6.0, 1.0 / 9.0), 0.05);
}

std::vector<CheckFn> asymptotic_checks() {
  std::vector<CheckFn> c;
  c.push_back([] {
    const auto form = asymptotics::leading_noninteger(0.5, 0.0, 0, 0);
    const SeriesSpec s{-0.5, 0.0, 0, 0};
    const auto windows = window_envelopes(
        [&](double r) { return oracle_at(s, r) - asymptotics::eval_form(form, r); }, 100.0, 800.0,
        1.1, 0.05);
    const double slope = loglog_slope(windows);
    return Check{"non-integer alpha=0.5: residual envelope slope", slope <= -1.25, slope, -1.25,
                 "claimed -min(alpha+1,2) = -1.5, tolerance +0.25"};
  });
  c.push_back([] {
    const SeriesSpec s{-1.0, 0.0, 0, 0};
    const double phi = specfun::phi_minus_one(1.0, 1.0);
    double lo = INFINITY, hi = -INFINITY;
    std::vector<double> rs;
    for (double r = 200.0; r <= 1000.0; r += 0.1) rs.push_back(r);
    std::vector<double> q(rs.size());
    parallel_for(rs.size(), [&](std::size_t i) {
      const double r = rs[i];
      q[i] = kPi * r * oracle_at(s, r) - std::log(r) + phi * std::sin(2.0 * r);
    });
    for (double v : q) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    const double mean = 0.5 * (lo + hi);
    return Check{"alpha=1: pi r S - log r + Phi sin 2r stays in a band", hi - lo <= 0.1, hi - lo, 0.1,
                 "band centre " + format_double(mean) + ", gamma + log 2 = " +
                     format_double(kEulerGamma + kLn2)};
  });
  c.push_back([] {
    Worst w;
    const double r = 500.0;
    w.see(std::fabs(oracle_at({1.0, 0.0, 0, 0}, r) / (r / kPi) - 1.0), "a=1 nu=0");
    w.see(std::fabs(4.0 * oracle_at({2.0, 0.0, 0, 0}, r) / (r * r) - 1.0), "a=2 nu=0");
    Check k = w.check("non-negative a: leading term at r = 500", 0.02);
    const double s02 = std::fabs(oracle_at({0.0, 0.0, 2, 0}, r));
    k.detail += "; |S(a=0,nu=2)| = " + format_double(s02);
    if (s02 > 0.05) k.pass = false;
    return k;
  });
  c.push_back([] {
    Worst w;
    for (int nu : {2, 4, 6}) w.see(std::fabs(asymptotics::leading_nonneg_coefficient(0.0, nu)), label({{"even nu", nu}}));
    for (int nu : {1, 3, 5}) {
      const double want = std::sin(0.5 * nu * kPi) / (kPi * nu);
      w.see(std::fabs(asymptotics::leading_nonneg_coefficient(0.0, nu) - want), label({{"odd nu", nu}}));
    }
    w.see(std::fabs(asymptotics::leading_nonneg_coefficient(0.0, 0) - 0.5), "nu=0");
    for (int a : {1, 2, 3})
      for (int nu : {0, 1, 2}) {
        const double lhs = asymptotics::leading_nonneg_coefficient(a, nu);
        const double rhs = 0.5 * (asymptotics::leading_nonneg_coefficient(a - 1, nu - 1) +
                                  asymptotics::leading_nonneg_coefficient(a - 1, nu + 1));
        w.see(std::fabs(lhs - rhs), label({{"recursion a", a}, {"nu", nu}}));
      }
    return w.check("leading coefficient zeros, odd values and recursion", 1e-12);
  });
  for (const TableCase& tc : table_cases()) {
    c.push_back([tc] {
      const auto windows = table_windows(tc, asymptotics::kDefaultTableVariant);
      const bool ok = strictly_decreasing(windows);
      std::ostringstream name;
      name << "derivative table " << direct::kind_name(tc.kind) << " a=" << tc.a << " beta=" << tc.beta
           << ": envelope decreases";
      std::ostringstream detail;
      detail << "windowed r^p residual envelopes:";
      for (const Window& w : windows) detail << ' ' << format_double(w.envelope);
      return Check{name.str(), ok, windows.back().envelope, windows.front().envelope, detail.str()};
    });
  }
  c.push_back([] {
    Worst w;
    for (double beta : {0.0, 0.5}) {
      const double phi = specfun::phi_minus_one(1.0, beta + 1.0);
      const auto windows = window_envelopes(
          [&](double r) {
            const double v = direct::sum_derivative_series(DerivativeKind::JdJ, -1.0, beta, r).value;
            return kPi * r * v + phi * std::cos(2.0 * r);
          },
          500.0, 600.0, 1.2, 0.05);
      w.see(windows.back().envelope, label({{"beta", beta}}));
    }
    return w.check("a=-1 JJ': pi r S + Phi cos 2r vanishes by r = 600", 0.05);
  });
  c.push_back([] {
    const PhaseResolution pr = resolve_phases();
    const bool defaults = pr.phase == asymptotics::kDefaultPhaseConvention &&
                          pr.minus_one_oscillatory_term &&
                          pr.jddj_below_minus_one == asymptotics::kDefaultTableVariant;
    const double worst = std::min({pr.phase_ratio, pr.minus_one_ratio, pr.jddj_ratio});
    return Check{"competing forms separated by the oracle (ratio >= 2) and defaults agree",
                 defaults && worst >= 2.0, worst, 2.0,
                 std::string("phase=") + asymptotics::convention_name(pr.phase) +
                     " ratio " + format_double(pr.phase_ratio) + "; oscillatory term at a=-1 " +
                     (pr.minus_one_oscillatory_term ? "present" : "absent") + " ratio " +
                     format_double(pr.minus_one_ratio) + "; JJ'' a<-1 " +
                     asymptotics::variant_name(pr.jddj_below_minus_one) + " ratio " +
                     format_double(pr.jddj_ratio)};
  });
  return c;
}

// ---- identities ------------------------------------------------------------

std::vector<CheckFn> identity_checks() {
  std::vector<CheckFn> c;
  c.push_back([] {
    Worst w;
    for (double r : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 40.0}) {
      const auto row = specfun::bessel_j_row(8, r);
      const double s = direct::sum_series({0.0, 0.0, 0, 0}, r).value;
      w.see(std::fabs(row[0] * row[0] + 2.0 * s - 1.0), label({{"squares r", r}}));
      for (int n : {1, 2, 3}) {
        double alt = 0.0;
        for (int k = 0; k <= 2 * n; ++k) alt += (k % 2 ? -1.0 : 1.0) * row[k] * row[2 * n - k];
        const double tail = direct::sum_series({0.0, 0.0, 2 * n, 0}, r).value;
        w.see(std::fabs(alt + 2.0 * tail), label({{"alternating r", r}, {"n", n}}));
      }
    }
    return w.check("Neumann addition identities", 1e-11);
  });
  c.push_back([] {
    Worst w;
    for (double r : {0.5, 3.0, 5.0, 12.0, 25.0}) {
      const auto row = specfun::bessel_j_row(4, r);
      const double d0 = -row[1];  // J_0' = -J_1
      const double dd = direct::sum_derivative_series(DerivativeKind::dJdJ, 0.0, 0.0, r).value;
      w.see(std::fabs(d0 * d0 + 2.0 * dd - 0.5), label({{"J'^2 r", r}}));
      const double jd = direct::sum_derivative_series(DerivativeKind::JdJ, 2.0, 0.0, r).value;
      // sum eps_l l^2 J_l J_l' = r/2 (d/dr of sum eps_l l^2 J_l^2 = r^2/2)
      w.see(std::fabs(2.0 * jd - 0.5 * r) / std::max(1.0, 0.5 * r), label({{"l^2 J J' r", r}}));
      const double l4 = direct::sum_series({4.0, 0.0, 0, 0}, r).value;
      const double want = r * r * (4.0 + 3.0 * r * r) / 8.0;
      w.see(std::fabs(2.0 * l4 - want) / std::max(1.0, want), label({{"l^4 J^2 r", r}}));
    }
    return w.check("Neumann-factor derivative identities", 1e-11);
  });
  c.push_back([] {
    double worst = INFINITY;
    std::string where;
    for (int nu = 1; nu <= 5; ++nu)
      for (int k = 1; k <= 300; ++k) {
        const double x = 0.1 * k;
        const auto row = specfun::bessel_j_row(nu + 1, x);
        const double d = row[nu] * row[nu] - row[nu - 1] * row[nu + 1];
        if (d < worst) {
          worst = d;
          where = label({{"nu", nu}, {"x", x}});
        }
      }
    return Check{"Turan inequality on (0, 30]", worst >= -1e-14, worst, -1e-14, "minimum at " + where};
  });
  c.push_back([] {
    Worst w;
    for (int nu = 1; nu <= 5; ++nu)
      for (double x : {0.5, 2.0, 7.5, 15.0, 29.0}) {
        const auto row = specfun::bessel_j_row(nu + 2, x);
        const double delta = row[nu] * row[nu] - row[nu - 1] * row[nu + 1];
        // sum_{n>=2} J_{nu+n}^2 / ((nu+n-1)(nu+n+1)) through the partial-fraction split
        const double s1 = direct::sum_series({-1.0, static_cast<double>(nu), nu + 1, nu + 1}, x).value;
        const double s2 = direct::sum_series({-1.0, nu + 2.0, nu + 1, nu + 1}, x).value;
        const double series = row[nu] * row[nu] / (nu + 1.0) + 2.0 * row[nu + 1] * row[nu + 1] / (nu + 2.0) +
                              2.0 * nu * 0.5 * (s1 - s2);
        w.see(std::fabs(series - delta), label({{"nu", nu}, {"x", x}}));
      }
    return w.check("Turan series form matches the determinant", 1e-10);
  });
  c.push_back([] {
    Worst w;
    for (double r : {0.7, 6.0, 33.0}) {
      const double ab = direct::sum_series({1.5, 0.3, 3, 1}, r).value;
      const double ba = direct::sum_series({1.5, 0.3, 1, 3}, r).value;
      w.see(std::fabs(ab - ba) / std::max(std::fabs(ab), 1e-300), label({{"r", r}}));
      const double jj = direct::sum_derivative_series(DerivativeKind::JJ, 2.0, 0.0, r).value;
      const double plain = direct::sum_series({2.0, 0.0, 0, 0}, r).value;
      w.see(std::fabs(jj - plain) / std::max(std::fabs(plain), 1e-300), label({{"JJ kind r", r}}));
    }
    return w.check("oracle symmetry in (m, m') and JJ kind reduction", 1e-14);
  });
  c.push_back([] {
    Worst w;
    for (double r : {1.0, 10.0, 80.0}) {
      const SeriesSpec s{-0.5, 0.0, 1, 0};
      const auto coarse = direct::sum_series(s, r, 1e-6);
      const auto fine = direct::sum_series(s, r, 1e-13);
      const double change = std::fabs(coarse.value - fine.value);
      w.see(change / std::max(coarse.err_est, 1e-300), label({{"r", r}}));
    }
    return w.check("oracle: tightening tol moves the value by at most err_est", 1.0);
  });
  return c;
}

std::vector<CheckFn> checks_for(Suite suite) {
  std::vector<CheckFn> all;
  auto append = [&](std::vector<CheckFn> more) {
    for (auto& f : more) all.push_back(std::move(f));
  };
  if (suite == Suite::kernel || suite == Suite::all) append(kernel_checks());
  if (suite == Suite::representations || suite == Suite::all) append(representation_checks());
  if (suite == Suite::asymptotics || suite == Suite::all) append(asymptotic_checks());
  if (suite == Suite::identities || suite == Suite::all) append(identity_checks());
  return all;
}

}  // namespace

std::optional<Suite> parse_suite(const std::string& name) {
  for (Suite s : {Suite::kernel, Suite::representations, Suite::asymptotics, Suite::identities, Suite::all})
    if (name == suite_name(s)) return s;
  return std::nullopt;
}

const char* suite_name(Suite suite) {
  switch (suite) {
    case Suite::kernel:
      return "kernel";
    case Suite::representations:
      return "representations";
    case Suite::asymptotics:
      return "asymptotics";
    case Suite::identities:
      return "identities";
    case Suite::all:
      return "all";
  }
  return "unknown";
}

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

PhaseResolution resolve_phases() {
  PhaseResolution out;
  const double lo = 50.0, hi = 400.0;

  // oscillatory phase: m' odd separates -pi mu/2 from -pi nu/2
  double env_mu = 0.0, env_nu = 0.0;
  for (double alpha : {1.5, 2.0}) {
    const SeriesSpec s{-alpha, 0.0, 1, 1};
    auto oracle = [&](double r) { return oracle_at(s, r); };
    env_mu = std::max(env_mu, form_envelope(oracle, asymptotics::asymptotic_form(s, PhaseConvention::mu), lo, hi));
    env_nu = std::max(env_nu, form_envelope(oracle, asymptotics::asymptotic_form(s, PhaseConvention::nu), lo, hi));
  }
  out.phase = env_mu <= env_nu ? PhaseConvention::mu : PhaseConvention::nu;
  out.phase_ratio = std::max(env_mu, env_nu) / std::min(env_mu, env_nu);

  auto variant_ratio = [&](DerivativeKind kind, double a, TableVariant& winner) {
    const Regime regime = asymptotics::regime_of(a);
    auto oracle = [&](double r) { return direct::sum_derivative_series(kind, a, 0.0, r).value; };
    const double printed = form_envelope(
        oracle, asymptotics::derivative_series_form(kind, regime, a, 0.0, TableVariant::as_printed), lo, hi);
    const double fixed = form_envelope(
        oracle, asymptotics::derivative_series_form(kind, regime, a, 0.0, TableVariant::corrected), lo, hi);
    winner = fixed <= printed ? TableVariant::corrected : TableVariant::as_printed;
    return std::max(printed, fixed) / std::min(printed, fixed);
  };
  TableVariant v;
  out.minus_one_ratio = variant_ratio(DerivativeKind::JJ, -1.0, v);
  out.minus_one_oscillatory_term = v == TableVariant::corrected;
  out.jddj_ratio = variant_ratio(DerivativeKind::JddJ, -2.0, out.jddj_below_minus_one);
  return out;
}

ValidationReport run_validation(Suite suite) {
  ValidationReport report;
  report.suite = suite;
  const std::vector<CheckFn> fns = checks_for(suite);
  report.checks.resize(fns.size());
  parallel_for(fns.size(), [&](std::size_t i) {
    try {
      report.checks[i] = fns[i]();
    } catch (const std::exception& e) {
      report.checks[i] = Check{"check " + std::to_string(i), false, 1e300, 0.0,
                               std::string("exception: ") + e.what()};
    }
  });
  if (suite == Suite::asymptotics || suite == Suite::all) report.phase_resolution = resolve_phases();

  report.environment = {
      {"simd", kernels::isa_name(kernels::active_isa())},
      {"threads", std::to_string(thread_count())},
      {"oracle_tol", format_double(direct::kDefaultTol)},
      {"quadrature_abs_tol", format_double(quadrature::QuadratureConfig{}.abs_tol)},
      {"quadrature_rel_tol", format_double(quadrature::QuadratureConfig{}.rel_tol)},
      {"hankel_grid", "a in {-2.5,-1.5,-1,-0.5}, beta in {0,0.5,1}, (m,m') in {(0,0),(1,0),(2,1)}, r in {1,5,10,30}"},
      {"lifted_grid", "a in {0,0.5,1,2}, same beta and (m,m'), r in {2,10,30}"},
      {"envelope_sampling", "geometric windows, step 0.05 in r"},
  };
  return report;
}

}  // namespace bnsum::harness
