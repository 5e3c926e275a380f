#pragma once

// G(n) = sum over ordered pairs m1 + m2 = n with m1, m2 odd of Λ(m1) Λ(m2),
// and scans of G(n) / (𝔖(n) n) against the window (δ, 2 - δ).

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "gzlab/arith.hpp"
#include "gzlab/singular_series.hpp"

namespace gzlab {

// Dense compensated dot product over odd m. Throws SizeError if the sieve
// does not reach n, DomainError for n < 2. Odd n gives 0.
[[nodiscard]] double goldbach_G(std::int64_t n, const SieveTable& sieve);

// G(n) for every n in [0, limit] (odd and n < 4 entries are 0), from one
// sparse pass over pairs of odd prime powers. Entry-by-entry equal to
// goldbach_G.
[[nodiscard]] std::vector<double> goldbach_G_all(std::int64_t limit, const SieveTable& sieve);

// G(n) for the even n in [n_from, n_to], element i belonging to n_from + 2i.
[[nodiscard]] std::vector<double> goldbach_G_range(std::int64_t n_from, std::int64_t n_to,
                                                   const SieveTable& sieve);

struct RatioRecord {
  std::int64_t n;
  double G;
  double singular_series;
  double ratio;  // G / (singular_series * n)
};

struct RatioScan {
  std::int64_t n_from = 0;
  std::int64_t n_to = 0;
  double delta = 0.0;
  std::vector<RatioRecord> records;
  std::vector<std::int64_t> violations;
  double min_ratio = 0.0;
  double max_ratio = 0.0;

  [[nodiscard]] bool in_window(double ratio) const noexcept { return delta < ratio && ratio < 2.0 - delta; }
  // Mean ratio over the records with n in [from, to].
  [[nodiscard]] double mean_ratio(std::int64_t from, std::int64_t to) const;
};

// Throws DomainError for odd endpoints, delta outside (0,1) or n_from < 4;
// SizeError if the sieve does not reach n_to.
[[nodiscard]] RatioScan ratio_scan(std::int64_t n_from, std::int64_t n_to, double delta,
                                   const SieveTable& sieve, const SingularSeriesCtx& ctx);

// Header `n,G,singular_series,ratio,in_window`, one row per even n.
void write_csv(std::ostream& out, const RatioScan& scan);

}  // namespace gzlab
