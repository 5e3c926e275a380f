#pragma once

#include <cmath>

namespace gzlab {

// Error-free transformations (Knuth TwoSum, FMA-based TwoProduct).
struct TwoTerm {
  double hi;
  double lo;
};

inline TwoTerm two_sum(double a, double b) noexcept {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline TwoTerm two_product(double a, double b) noexcept {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

/// Double-double style compensated accumulator (Sum2 / Dot2 of Ogita, Rump
/// and Oishi). The result is as accurate as if accumulated in twice the
/// working precision and then rounded, which makes it insensitive to the
/// order of accumulation except in vanishingly rare rounding ties.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double x) : hi_(x) {}

  void add(double x) noexcept {
    const TwoTerm t = two_sum(hi_, x);
    hi_ = t.hi;
    lo_ += t.lo;
  }

  void add_product(double a, double b) noexcept {
    const TwoTerm p = two_product(a, b);
    const TwoTerm t = two_sum(hi_, p.hi);
    hi_ = t.hi;
    lo_ += t.lo + p.lo;
  }

  void merge(const CompensatedSum& other) noexcept {
    const TwoTerm t = two_sum(hi_, other.hi_);
    hi_ = t.hi;
    lo_ += t.lo + other.lo_;
  }

  CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }

  [[nodiscard]] double value() const noexcept { return hi_ + lo_; }
  [[nodiscard]] double hi() const noexcept { return hi_; }
  [[nodiscard]] double lo() const noexcept { return lo_; }

 private:
  double hi_ = 0.0;
  double lo_ = 0.0;
};

}  // namespace gzlab
