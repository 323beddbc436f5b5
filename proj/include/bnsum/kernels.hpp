#pragma once

// Reduction kernels shared by the direct sums and the Gauss panels.
//
// Each kernel has a scalar reference and SIMD variants; the variant is picked
// once at first use from the CPU features (override with BNSUM_SIMD=scalar,
// avx2 or neon, or force_isa()). Variants differ only in summation order.

#include <cstddef>

namespace bnsum::kernels {

enum class Isa { scalar, avx2, neon };

struct DotResult {
  double sum = 0.0;      // sum w_i x_i y_i
  double abs_sum = 0.0;  // sum |w_i x_i y_i|, for rounding bounds
};

DotResult weighted_dot(const double* w, const double* x, const double* y, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);

Isa active_isa();
bool isa_available(Isa isa);
/// Throws DomainError when the CPU or the build lacks the requested variant.
void force_isa(Isa isa);
const char* isa_name(Isa isa);

namespace scalar {
DotResult weighted_dot(const double* w, const double* x, const double* y, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
}  // namespace scalar

namespace avx2 {
bool compiled();
DotResult weighted_dot(const double* w, const double* x, const double* y, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
}  // namespace avx2

namespace neon {
bool compiled();
DotResult weighted_dot(const double* w, const double* x, const double* y, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
}  // namespace neon

}  // namespace bnsum::kernels
