#include <cmath>
#include <map>
#include <string>
#include <tuple>

#include "bnsum/error.hpp"
#include "bnsum/quadrature.hpp"
#include "bnsum/specfun.hpp"

namespace bnsum::quadrature {

namespace {

using Key = std::tuple<double, double, int, int>;  // a, beta, m, m'

class Lifter {
 public:
  Lifter(double r, const QuadratureConfig& cfg) : r_(r), cfg_(cfg) {}

  EvalResult eval(const SeriesSpec& spec) {
    const SeriesSpec c = spec.canonical();
    const Key key{c.a, c.beta, c.m, c.m_prime};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    EvalResult res = c.a < 0.0 ? eval_hankel(c, r_, cfg_) : lift(c);
    memo_.emplace(key, res);
    return res;
  }

  std::int64_t hankel_leaves() const {
    std::int64_t n = 0;
    for (const auto& [key, res] : memo_)
      if (std::get<0>(key) < 0.0) ++n;
    return n;
  }

 private:
  // S with first index m - 1 = -1 shifted back to non-negative orders:
  // S_{a,b,-1,m'} = J_0 J_{m'+1} (1+b)^a + S_{a,b+1,0,m'+1}
  EvalResult lower_edge(double a, double beta, int m_prime) {
    EvalResult inner = eval({a, beta + 1.0, 0, m_prime + 1});
    const double edge = specfun::bessel_j(0, r_) * specfun::bessel_j(m_prime + 1, r_) *
                        std::pow(1.0 + beta, a);
    inner.value += edge;
    return inner;
  }

  EvalResult term(double a, double beta, int m, int m_prime) {
    if (m < 0) return lower_edge(a, beta, m_prime);
    return eval({a, beta, m, m_prime});
  }

  // S_a = (r/2) sum_{i=0}^{n} c^i [S_{a-1-i,m-1} + S_{a-1-i,m+1}] + c^{n+1} S_{a-1-n,m},
  // c = beta - m, n = floor(a) so the last exponent is negative.
  EvalResult lift(const SeriesSpec& s) {
    const int n = static_cast<int>(std::floor(s.a));
    const double c = s.beta - s.m;
    EvalResult out;
    out.method = Method::lifted;
    auto add = [&](double weight, const EvalResult& part) {
      if (weight == 0.0) return;
      out.value += weight * part.value;
      out.err_est += std::fabs(weight) * part.err_est;
      out.work += part.work;
      out.warnings.insert(out.warnings.end(), part.warnings.begin(), part.warnings.end());
    };
    double c_pow = 1.0;
    for (int i = 0; i <= n; ++i) {
      const double a_i = s.a - 1.0 - i;
      const double weight = 0.5 * r_ * c_pow;
      if (weight != 0.0) {
        add(weight, term(a_i, s.beta, s.m - 1, s.m_prime));
        add(weight, term(a_i, s.beta, s.m + 1, s.m_prime));
      }
      c_pow *= c;
    }
    add(c_pow, eval({s.a - 1.0 - n, s.beta, s.m, s.m_prime}));
    if (std::fabs(c) > 1.0 && n >= 2)
      out.warnings.push_back("lifted: |beta - m| > 1 with recursion depth " + std::to_string(n) +
                             "; cancellation possible");
    return out;
  }

  double r_;
  QuadratureConfig cfg_;
  std::map<Key, EvalResult> memo_;
};

}  // namespace

EvalResult eval_lifted(const SeriesSpec& spec, double r, const QuadratureConfig& cfg) {
  validate(spec);
  validate(cfg);
  if (!(spec.a >= 0.0)) throw DomainError("eval_lifted: requires a >= 0; use eval_hankel");
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("eval_lifted: r must be >= 0");
  Lifter lifter(r, cfg);
  EvalResult out = lifter.eval(spec);
  out.method = Method::lifted;
  return out;
}

}  // namespace bnsum::quadrature
