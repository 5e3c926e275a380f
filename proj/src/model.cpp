#include "gzlab/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "gzlab/compensated.hpp"
#include "gzlab/errors.hpp"
#include "gzlab/parallel.hpp"
#include "gzlab/simd.hpp"
#include "gzlab/special.hpp"

namespace gzlab {

namespace {

constexpr double kModelCutoffFactor = 40.0;
constexpr std::uint64_t kModelChunk = 1 << 14;

}  // namespace

std::int64_t model_cutoff(double N) { return static_cast<std::int64_t>(std::floor(kModelCutoffFactor * N)); }

ModelReport model_sum(std::uint32_t q, double N, const SingularSeriesCtx& ctx, const SieveTable& sieve) {
  if (q < 1) throw DomainError("model_sum: q must be >= 1");
  if (!(N > 0.0) || !std::isfinite(N)) throw DomainError("model_sum: N must be positive");
  const std::int64_t cutoff = model_cutoff(N);
  if (cutoff > sieve.limit())
    throw SizeError("model_sum: sieve limit " + std::to_string(sieve.limit()) + " below " + std::to_string(cutoff));

  const std::uint64_t k = lcm2(q);
  const std::uint64_t count = static_cast<std::uint64_t>(cutoff) / k;
  const std::size_t n_chunks = (count + kModelChunk - 1) / kModelChunk;
  std::vector<double> partial(n_chunks, 0.0);

  // 2C is pulled out; each chunk sums H(n) n e^{-n/N} over its multiples.
  parallel::for_each_chunk(n_chunks, [&](std::size_t c) {
    const std::uint64_t first = c * kModelChunk + 1;
    const std::uint64_t last = std::min<std::uint64_t>(count, (c + 1) * kModelChunk);
    std::vector<double> terms;
    terms.reserve(last - first + 1);
    for (std::uint64_t j = first; j <= last; ++j) {
      const std::uint64_t n = j * k;
      const double nd = static_cast<double>(n);
      terms.push_back(hl_factor_H(n, sieve) * nd * std::exp(-nd / N));
    }
    partial[c] = simd::sum(terms);
  });

  ModelReport r;
  r.q = q;
  r.N = N;
  r.model_sum = 2.0 * ctx.C_value * simd::sum(partial);
  r.main_term = N * N / static_cast<double>(euler_phi(q));
  r.rel_err = std::abs(r.model_sum - r.main_term) / r.main_term;
  r.lemma_ratio = r.rel_err / std::sqrt(static_cast<double>(q) / N);
  // H(n) <= 1 + log2(n) crudely; sum_{n > X} n e^{-n/N} <= N (X + N) e^{-X/N}.
  const double X = static_cast<double>(cutoff);
  r.tail_bound = 2.0 * ctx.C_value * (1.0 + std::log2(X)) * N * (X + N) * std::exp(-X / N) / r.main_term;
  return r;
}

JsonObject to_json(const ModelReport& r) {
  JsonObject o;
  o.integer("q", r.q)
      .number("N", r.N)
      .number("model_sum", r.model_sum)
      .number("main_term", r.main_term)
      .number("rel_err", r.rel_err)
      .number("lemma_ratio", r.lemma_ratio);
  return o;
}

double zq_closed_form(std::uint32_t q, double s, const SingularSeriesCtx& ctx) {
  if (q < 1) throw DomainError("zq_closed_form: q must be >= 1");
  if (!(s > 1.0)) throw DomainError("zq_closed_form: s must exceed 1");
  const std::uint64_t k = lcm2(q);
  const Factorization fk = factorize(k);
  CompensatedSum log_prod;
  for (std::uint32_t p : *ctx.odd_primes) {
    if (k % p == 0) continue;
    const double pd = p;
    log_prod.add(std::log1p(std::pow(pd, -s) / (pd - 2.0)));
  }
  const double kd = static_cast<double>(k);
  return hl_factor_H(fk) * std::pow(kd, -s) * riemann_zeta(s) * std::exp(log_prod.value());
}

ZqValues zq_eval(std::uint32_t q, double s, const SingularSeriesCtx& ctx) {
  if (q < 1 || q > 2000) throw DomainError("zq_eval: q must lie in [1, 2000]");
  if (!(s >= 1.05)) throw DomainError("zq_eval: s below 1.05; use the residue path near s = 1");

  const std::uint64_t k = lcm2(q);
  const std::uint64_t cutoff = 10'000'000ULL / q;
  const std::uint64_t count = cutoff / k;

  // h[j] = H(j k), built by sieving the odd primes dividing j k.
  std::vector<double> h(count + 1, 1.0);
  for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(cutoff))) {
    if (p == 2) continue;
    const double factor = 1.0 + 1.0 / (static_cast<double>(p) - 2.0);
    if (k % p == 0) {
      for (std::uint64_t j = 1; j <= count; ++j) h[j] *= factor;
    } else {
      for (std::uint64_t j = p; j <= count; j += p) h[j] *= factor;
    }
  }

  CompensatedSum series, density;
  for (std::uint64_t j = count; j >= 1; --j) {
    const double n = static_cast<double>(j * k);
    series.add(h[j] * std::pow(n, -s));
    density.add(h[j]);
  }

  ZqValues v;
  v.cutoff = count * k;
  const double X = static_cast<double>(v.cutoff);
  v.direct_partial = series.value();
  v.tail_estimate = density.value() / X * std::pow(X, 1.0 - s) / (s - 1.0);
  v.direct = v.direct_partial + v.tail_estimate;
  v.closed_form = zq_closed_form(q, s, ctx);
  return v;
}

}  // namespace gzlab
