#pragma once

// Compensated reduction kernels. Each kernel has a portable scalar reference
// and an AVX2+FMA variant; the variant is picked once per process from CPUID
// (overridable with GZLAB_SIMD=scalar). Both variants return the compensated
// result rounded once, so they agree to within an ulp on well-conditioned
// input and exactly in practice on nonnegative data.

#include <cstdint>
#include <span>
#include <string_view>

namespace gzlab::simd {

enum class Isa { scalar, avx2 };

[[nodiscard]] Isa active_isa();
[[nodiscard]] std::string_view isa_name(Isa isa);

// Forces a particular variant for the rest of the process (tests, benchmarks).
// Requesting avx2 on a machine without it falls back to scalar.
void force_isa(Isa isa);

// Sum of x, compensated.
[[nodiscard]] double sum(std::span<const double> x);

// Sum of x[i] * y[i], compensated (Dot2). Spans must have equal length.
[[nodiscard]] double dot(std::span<const double> x, std::span<const double> y);

// Sparse compensated update used by the bulk Goldbach pass: for every j,
// the double-double accumulator (hi, lo)[pos[j] + shift] gains a * b[j].
// Within one call the target slots must be distinct.
void scatter_product_add(double a, std::span<const double> b, std::span<const std::uint32_t> pos,
                         std::int64_t shift, double* hi, double* lo);

namespace scalar {
[[nodiscard]] double sum(std::span<const double> x);
[[nodiscard]] double dot(std::span<const double> x, std::span<const double> y);
void scatter_product_add(double a, std::span<const double> b, std::span<const std::uint32_t> pos,
                         std::int64_t shift, double* hi, double* lo);
}  // namespace scalar

namespace avx2 {
[[nodiscard]] bool available();
[[nodiscard]] double sum(std::span<const double> x);
[[nodiscard]] double dot(std::span<const double> x, std::span<const double> y);
void scatter_product_add(double a, std::span<const double> b, std::span<const std::uint32_t> pos,
                         std::int64_t shift, double* hi, double* lo);
}  // namespace avx2

}  // namespace gzlab::simd
