#include <cassert>

#include "gzlab/compensated.hpp"
#include "gzlab/simd.hpp"

namespace gzlab::simd::scalar {

double sum(std::span<const double> x) {
  CompensatedSum acc;
  for (double v : x) acc.add(v);
  return acc.value();
}

double dot(std::span<const double> x, std::span<const double> y) {
  assert(x.size() == y.size());
  CompensatedSum acc;
  for (std::size_t i = 0; i < x.size(); ++i) acc.add_product(x[i], y[i]);
  return acc.value();
}

void scatter_product_add(double a, std::span<const double> b, std::span<const std::uint32_t> pos,
                         std::int64_t shift, double* hi, double* lo) {
  assert(b.size() == pos.size());
  for (std::size_t j = 0; j < b.size(); ++j) {
    const auto slot = static_cast<std::size_t>(pos[j] + shift);
    const TwoTerm p = two_product(a, b[j]);
    const TwoTerm t = two_sum(hi[slot], p.hi);
    hi[slot] = t.hi;
    lo[slot] += t.lo + p.lo;
  }
}

}  // namespace gzlab::simd::scalar
