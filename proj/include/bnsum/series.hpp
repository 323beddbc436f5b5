#pragma once

// Shared parameter and result types for every evaluation route.
//
//   S_{a,beta,m,m'}(r) = sum_{l>=1} J_{l+m'}(r) J_{l+m}(r) (l + beta)^a
//
// a is the signed weight exponent; the integral representations use
// alpha = -a. mu = m + m', nu = m - m'.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bnsum {

struct SeriesSpec {
  double a = 0.0;
  double beta = 0.0;
  int m = 0;
  int m_prime = 0;

  int mu() const { return m + m_prime; }
  int nu() const { return m - m_prime; }
  /// Same series with m and m' swapped if needed so that nu >= 0.
  SeriesSpec canonical() const;
};

/// Throws DomainError unless beta > -1, m >= 0, m' >= 0 and a is finite.
void validate(const SeriesSpec& spec);

enum class Method { oracle, hankel, exp2d, lifted, asym };

const char* method_name(Method method);
std::optional<Method> parse_method(std::string_view name);

struct EvalResult {
  double value = 0.0;
  double err_est = 0.0;
  Method method = Method::oracle;
  std::int64_t work = 0;  // terms summed or integrand nodes
  std::optional<double> imag_residue;  // exp2d only
  std::vector<std::string> warnings;
};

}  // namespace bnsum
