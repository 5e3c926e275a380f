#include "gzlab/goldbach.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <string>

#include "gzlab/compensated.hpp"
#include "gzlab/errors.hpp"
#include "gzlab/format.hpp"
#include "gzlab/parallel.hpp"
#include "gzlab/simd.hpp"

namespace gzlab {

namespace {

constexpr std::int64_t kChunk = std::int64_t{1} << 15;

void require_reach(std::int64_t n, const SieveTable& sieve, const char* what) {
  if (n > sieve.limit())
    throw SizeError(std::string(what) + ": sieve limit " + std::to_string(sieve.limit()) +
                    " below " + std::to_string(n));
}

struct OddPrimePowers {
  std::vector<std::uint32_t> m;
  std::vector<double> lambda;
};

OddPrimePowers odd_prime_powers(std::int64_t limit, const SieveTable& sieve) {
  OddPrimePowers out;
  for (std::int64_t k = 3; k <= limit; k += 2) {
    const double l = sieve.lambda(k);
    if (l != 0.0) {
      out.m.push_back(static_cast<std::uint32_t>(k));
      out.lambda.push_back(l);
    }
  }
  return out;
}

}  // namespace

double goldbach_G(std::int64_t n, const SieveTable& sieve) {
  if (n < 2) throw DomainError("goldbach_G: n must be >= 2");
  require_reach(n, sieve, "goldbach_G");
  if (n % 2 != 0) return 0.0;
  // m1 = 2j + 1 and m2 = 2(h - j) + 1 with h = n/2 - 1.
  const auto len = static_cast<std::size_t>(n / 2);
  std::vector<double> a(len), rev(len);
  for (std::size_t j = 0; j < len; ++j) a[j] = sieve.lambda(static_cast<std::int64_t>(2 * j + 1));
  std::reverse_copy(a.begin(), a.end(), rev.begin());
  return simd::dot(a, rev);
}

std::vector<double> goldbach_G_range(std::int64_t n_from, std::int64_t n_to, const SieveTable& sieve) {
  if (n_from % 2 != 0 || n_to % 2 != 0) throw DomainError("goldbach_G_range: endpoints must be even");
  if (n_from < 0 || n_from > n_to) throw DomainError("goldbach_G_range: need 0 <= n_from <= n_to");
  require_reach(n_to, sieve, "goldbach_G_range");

  const OddPrimePowers pp = odd_prime_powers(n_to, sieve);
  const std::int64_t span = n_to - n_from + 1;
  const auto n_chunks = static_cast<std::size_t>((span + kChunk - 1) / kChunk);
  std::vector<double> out(static_cast<std::size_t>((n_to - n_from) / 2 + 1), 0.0);

  parallel::for_each_chunk(n_chunks, [&](std::size_t c) {
    const std::int64_t lo_n = n_from + static_cast<std::int64_t>(c) * kChunk;
    const std::int64_t hi_n = std::min(n_to + 1, lo_n + kChunk);  // exclusive
    std::vector<double> hi(static_cast<std::size_t>(hi_n - lo_n), 0.0);
    std::vector<double> lo(hi.size(), 0.0);
    // m1 ascending outer loop: every G(n) sees its terms in m1 order.
    for (std::size_t i = 0; i < pp.m.size(); ++i) {
      const std::int64_t m1 = pp.m[i];
      if (m1 + 3 >= hi_n) break;
      const auto first = std::lower_bound(pp.m.begin(), pp.m.end(),
                                          static_cast<std::uint32_t>(std::max<std::int64_t>(0, lo_n - m1)));
      const auto last = std::lower_bound(first, pp.m.end(), static_cast<std::uint32_t>(hi_n - m1));
      const auto b = static_cast<std::size_t>(first - pp.m.begin());
      const auto e = static_cast<std::size_t>(last - pp.m.begin());
      if (b == e) continue;
      simd::scatter_product_add(pp.lambda[i], std::span(pp.lambda).subspan(b, e - b),
                                std::span(pp.m).subspan(b, e - b), m1 - lo_n, hi.data(), lo.data());
    }
    for (std::int64_t n = lo_n; n < hi_n; n += 2) {
      const auto k = static_cast<std::size_t>(n - lo_n);
      out[static_cast<std::size_t>((n - n_from) / 2)] = hi[k] + lo[k];
    }
  });
  return out;
}

std::vector<double> goldbach_G_all(std::int64_t limit, const SieveTable& sieve) {
  if (limit < 0) throw DomainError("goldbach_G_all: negative limit");
  require_reach(limit, sieve, "goldbach_G_all");
  const std::int64_t even_top = limit - (limit % 2);
  const std::vector<double> evens = goldbach_G_range(0, even_top, sieve);
  std::vector<double> all(static_cast<std::size_t>(limit) + 1, 0.0);
  for (std::size_t i = 0; i < evens.size(); ++i) all[2 * i] = evens[i];
  return all;
}

double RatioScan::mean_ratio(std::int64_t from, std::int64_t to) const {
  CompensatedSum acc;
  std::size_t count = 0;
  for (const auto& r : records) {
    if (r.n < from || r.n > to) continue;
    acc.add(r.ratio);
    ++count;
  }
  return count ? acc.value() / static_cast<double>(count) : std::numeric_limits<double>::quiet_NaN();
}

RatioScan ratio_scan(std::int64_t n_from, std::int64_t n_to, double delta, const SieveTable& sieve,
                     const SingularSeriesCtx& ctx) {
  if (n_from % 2 != 0 || n_to % 2 != 0) throw DomainError("ratio_scan: endpoints must be even");
  if (n_from < 4 || n_from > n_to) throw DomainError("ratio_scan: need 4 <= n_from <= n_to");
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("ratio_scan: delta must lie in (0, 1)");
  require_reach(n_to, sieve, "ratio_scan");

  RatioScan scan;
  scan.n_from = n_from;
  scan.n_to = n_to;
  scan.delta = delta;
  const std::vector<double> g = goldbach_G_range(n_from, n_to, sieve);
  scan.records.reserve(g.size());
  scan.min_ratio = std::numeric_limits<double>::infinity();
  scan.max_ratio = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const std::int64_t n = n_from + 2 * static_cast<std::int64_t>(i);
    const double ss = singular_series(static_cast<std::uint64_t>(n), ctx, &sieve);
    const double ratio = g[i] / (ss * static_cast<double>(n));
    scan.records.push_back({n, g[i], ss, ratio});
    if (!scan.in_window(ratio)) scan.violations.push_back(n);
    scan.min_ratio = std::min(scan.min_ratio, ratio);
    scan.max_ratio = std::max(scan.max_ratio, ratio);
  }
  return scan;
}

void write_csv(std::ostream& out, const RatioScan& scan) {
  out << "n,G,singular_series,ratio,in_window\n";
  for (const auto& r : scan.records) {
    out << r.n << ',' << format_number(r.G) << ',' << format_number(r.singular_series) << ','
        << format_number(r.ratio) << ',' << (scan.in_window(r.ratio) ? 1 : 0) << '\n';
  }
}

}  // namespace gzlab
