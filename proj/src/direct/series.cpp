#include "bnsum/series.hpp"

#include <cmath>
#include <utility>

#include "bnsum/error.hpp"

namespace bnsum {

SeriesSpec SeriesSpec::canonical() const {
  SeriesSpec out = *this;
  if (out.m < out.m_prime) std::swap(out.m, out.m_prime);
  return out;
}

void validate(const SeriesSpec& spec) {
  if (!std::isfinite(spec.a)) throw DomainError("series: a must be finite");
  if (!(spec.beta > -1.0) || !std::isfinite(spec.beta)) throw DomainError("series: beta must exceed -1");
  if (spec.m < 0 || spec.m_prime < 0) throw DomainError("series: m and m' must be >= 0");
}

const char* method_name(Method method) {
  switch (method) {
    case Method::oracle:
      return "oracle";
    case Method::hankel:
      return "hankel";
    case Method::exp2d:
      return "exp2d";
    case Method::lifted:
      return "lifted";
    case Method::asym:
      return "asym";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::oracle, Method::hankel, Method::exp2d, Method::lifted, Method::asym})
    if (name == method_name(m)) return m;
  return std::nullopt;
}

}  // namespace bnsum
