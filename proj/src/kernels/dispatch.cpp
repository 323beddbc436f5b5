#include <atomic>
#include <cstdlib>
#include <string>
#include <string_view>

#include "bnsum/error.hpp"
#include "bnsum/kernels.hpp"

namespace bnsum::kernels {

namespace {

bool cpu_has_avx2() {
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa detect() {
  if (const char* env = std::getenv("BNSUM_SIMD")) {
    const std::string_view want(env);
    if (want == "scalar") return Isa::scalar;
    if (want == "avx2" && isa_available(Isa::avx2)) return Isa::avx2;
    if (want == "neon" && isa_available(Isa::neon)) return Isa::neon;
  }
  if (isa_available(Isa::avx2)) return Isa::avx2;
  if (isa_available(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
      return avx2::compiled() && cpu_has_avx2();
    case Isa::neon:
      return neon::compiled();  // baseline on aarch64
  }
  return false;
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (!isa_available(isa))
    throw DomainError(std::string("kernels: ISA not available: ") + isa_name(isa));
  current().store(isa, std::memory_order_relaxed);
}

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

DotResult weighted_dot(const double* w, const double* x, const double* y, std::size_t n) {
  switch (active_isa()) {
    case Isa::avx2:
      return avx2::weighted_dot(w, x, y, n);
    case Isa::neon:
      return neon::weighted_dot(w, x, y, n);
    case Isa::scalar:
      break;
  }
  return scalar::weighted_dot(w, x, y, n);
}

double dot(const double* x, const double* y, std::size_t n) {
  switch (active_isa()) {
    case Isa::avx2:
      return avx2::dot(x, y, n);
    case Isa::neon:
      return neon::dot(x, y, n);
    case Isa::scalar:
      break;
  }
  return scalar::dot(x, y, n);
}

}  // namespace bnsum::kernels
