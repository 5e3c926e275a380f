#include <cassert>
#include <cstddef>
#include <cstdint>

#include "gzlab/compensated.hpp"
#include "gzlab/simd.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define GZLAB_X86 1
#include <immintrin.h>
#else
#define GZLAB_X86 0
#endif

namespace gzlab::simd::avx2 {

#if GZLAB_X86

namespace {

#define GZLAB_AVX2_TARGET __attribute__((target("avx2,fma")))

// Lane-wise TwoSum: (hi, lo) += x.
GZLAB_AVX2_TARGET inline void lane_two_sum(__m256d& hi, __m256d& lo, __m256d x) {
  const __m256d s = _mm256_add_pd(hi, x);
  const __m256d bb = _mm256_sub_pd(s, hi);
  const __m256d err = _mm256_add_pd(_mm256_sub_pd(hi, _mm256_sub_pd(s, bb)),
                                    _mm256_sub_pd(x, bb));
  hi = s;
  lo = _mm256_add_pd(lo, err);
}

GZLAB_AVX2_TARGET inline void lane_two_product_sum(__m256d& hi, __m256d& lo, __m256d a,
                                                   __m256d b) {
  const __m256d p = _mm256_mul_pd(a, b);
  const __m256d e = _mm256_fmsub_pd(a, b, p);
  lane_two_sum(hi, lo, p);
  lo = _mm256_add_pd(lo, e);
}

// Lanes are folded in a fixed order: all hi parts, then all lo parts.
GZLAB_AVX2_TARGET inline void fold(CompensatedSum& acc, __m256d hi0, __m256d lo0,
                                   __m256d hi1, __m256d lo1) {
  alignas(32) double h0[4], l0[4], h1[4], l1[4];
  _mm256_store_pd(h0, hi0);
  _mm256_store_pd(l0, lo0);
  _mm256_store_pd(h1, hi1);
  _mm256_store_pd(l1, lo1);
  for (int i = 0; i < 4; ++i) acc.add(h0[i]);
  for (int i = 0; i < 4; ++i) acc.add(h1[i]);
  for (int i = 0; i < 4; ++i) acc.add(l0[i]);
  for (int i = 0; i < 4; ++i) acc.add(l1[i]);
}

GZLAB_AVX2_TARGET double sum_impl(const double* x, std::size_t n) {
  __m256d hi0 = _mm256_setzero_pd(), lo0 = _mm256_setzero_pd();
  __m256d hi1 = _mm256_setzero_pd(), lo1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    lane_two_sum(hi0, lo0, _mm256_loadu_pd(x + i));
    lane_two_sum(hi1, lo1, _mm256_loadu_pd(x + i + 4));
  }
  CompensatedSum acc;
  fold(acc, hi0, lo0, hi1, lo1);
  for (; i < n; ++i) acc.add(x[i]);
  return acc.value();
}

GZLAB_AVX2_TARGET double dot_impl(const double* x, const double* y, std::size_t n) {
  __m256d hi0 = _mm256_setzero_pd(), lo0 = _mm256_setzero_pd();
  __m256d hi1 = _mm256_setzero_pd(), lo1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    lane_two_product_sum(hi0, lo0, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    lane_two_product_sum(hi1, lo1, _mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4));
  }
  CompensatedSum acc;
  fold(acc, hi0, lo0, hi1, lo1);
  for (; i < n; ++i) acc.add_product(x[i], y[i]);
  return acc.value();
}

// Slots are indirect and distinct, so this stays one element at a time; the
// gain over the portable build is the fused multiply-add in TwoProduct.
GZLAB_AVX2_TARGET void scatter_impl(double a, const double* b, const std::uint32_t* pos,
                                    std::size_t n, std::int64_t shift, double* hi, double* lo) {
  for (std::size_t j = 0; j < n; ++j) {
    const auto slot = static_cast<std::size_t>(pos[j] + shift);
    const double p = a * b[j];
    const double pe = __builtin_fma(a, b[j], -p);
    const double h = hi[slot];
    const double s = h + p;
    const double bb = s - h;
    const double err = (h - (s - bb)) + (p - bb);
    hi[slot] = s;
    lo[slot] += err + pe;
  }
}

}  // namespace

bool available() {
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
}

double sum(std::span<const double> x) { return sum_impl(x.data(), x.size()); }

double dot(std::span<const double> x, std::span<const double> y) {
  assert(x.size() == y.size());
  return dot_impl(x.data(), y.data(), x.size());
}

void scatter_product_add(double a, std::span<const double> b, std::span<const std::uint32_t> pos,
                         std::int64_t shift, double* hi, double* lo) {
  assert(b.size() == pos.size());
  scatter_impl(a, b.data(), pos.data(), b.size(), shift, hi, lo);
}

#else

bool available() { return false; }
void scatter_product_add(double a, std::span<const double> b, std::span<const std::uint32_t> pos,
                         std::int64_t shift, double* hi, double* lo) {
  scalar::scatter_product_add(a, b, pos, shift, hi, lo);
}
double sum(std::span<const double> x) { return scalar::sum(x); }
double dot(std::span<const double> x, std::span<const double> y) { return scalar::dot(x, y); }

#endif

}  // namespace gzlab::simd::avx2
