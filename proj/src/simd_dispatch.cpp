#include <atomic>
#include <cstdlib>
#include <string_view>

#include "gzlab/simd.hpp"

namespace gzlab::simd {

namespace {

Isa detect() {
  if (const char* env = std::getenv("GZLAB_SIMD"); env && std::string_view(env) == "scalar")
    return Isa::scalar;
  return avx2::available() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

Isa active_isa() { return current().load(std::memory_order_relaxed); }

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::avx2:
      return "avx2";
    case Isa::scalar:
      break;
  }
  return "scalar";
}

void force_isa(Isa isa) {
  if (isa == Isa::avx2 && !avx2::available()) isa = Isa::scalar;
  current().store(isa, std::memory_order_relaxed);
}

double sum(std::span<const double> x) {
  return active_isa() == Isa::avx2 ? avx2::sum(x) : scalar::sum(x);
}

double dot(std::span<const double> x, std::span<const double> y) {
  return active_isa() == Isa::avx2 ? avx2::dot(x, y) : scalar::dot(x, y);
}

void scatter_product_add(double a, std::span<const double> b, std::span<const std::uint32_t> pos,
                         std::int64_t shift, double* hi, double* lo) {
  if (active_isa() == Isa::avx2)
    avx2::scatter_product_add(a, b, pos, shift, hi, lo);
  else
    scalar::scatter_product_add(a, b, pos, shift, hi, lo);
}

}  // namespace gzlab::simd
