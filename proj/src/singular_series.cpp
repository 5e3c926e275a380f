#include "gzlab/singular_series.hpp"

#include <cmath>
#include <string>

#include "gzlab/compensated.hpp"
#include "gzlab/errors.hpp"

namespace gzlab {

SingularSeriesCtx constant_C(std::int64_t prime_limit) {
  if (prime_limit < 1000) throw DomainError("constant_C: prime_limit must be >= 1000");
  if (prime_limit > kMaxSieveLimit) throw SizeError("constant_C: prime_limit too large");

  auto primes = primes_up_to(static_cast<std::uint32_t>(prime_limit));
  auto odd = std::make_shared<std::vector<std::uint32_t>>(primes.begin() + 1, primes.end());

  // Log-space product; roughly 10^5 factors at the usual truncation.
  CompensatedSum log_c;
  for (std::uint32_t p : *odd) {
    const double pm1 = static_cast<double>(p) - 1.0;
    log_c.add(std::log1p(-1.0 / (pm1 * pm1)));
  }

  SingularSeriesCtx ctx;
  ctx.prime_limit = prime_limit;
  ctx.C_value = std::exp(log_c.value());
  // sum_{p > P} 1/(p-1)^2 <= int_P^inf dt/(t-1)^2
  ctx.tail_bound = 1.0 / (static_cast<double>(prime_limit) - 1.0);
  ctx.odd_primes = std::move(odd);
  return ctx;
}

double hl_factor_H(const Factorization& f) {
  double h = 1.0;
  for (const auto& pp : f.factors)
    if (pp.prime > 2) h *= 1.0 + 1.0 / static_cast<double>(pp.prime - 2);
  return h;
}

double hl_factor_H(std::uint64_t n, const SieveTable& sieve) { return hl_factor_H(factorize(n, &sieve)); }

double singular_series(std::uint64_t n, const SingularSeriesCtx& ctx, const SieveTable* sieve) {
  return 2.0 * ctx.C_value * hl_factor_H(factorize(n, sieve));
}

ResidueCheck residue_identity_check(std::uint64_t q, const SingularSeriesCtx& ctx) {
  if (q == 0) throw DomainError("residue_identity_check: q must be >= 1");
  const std::uint64_t k = lcm2(q);
  const Factorization fk = factorize(k);
  for (const auto& pp : fk.factors)
    if (pp.prime > 2 && pp.prime > static_cast<std::uint64_t>(ctx.prime_limit))
      throw DomainError("residue_identity_check: q has prime factor " + std::to_string(pp.prime) +
                        " beyond the truncation point");

  CompensatedSum log_prod;
  std::size_t next_factor = 0;
  for (std::uint32_t p : *ctx.odd_primes) {
    while (next_factor < fk.factors.size() && fk.factors[next_factor].prime < p) ++next_factor;
    if (next_factor < fk.factors.size() && fk.factors[next_factor].prime == p) continue;
    const double pd = static_cast<double>(p);
    log_prod.add(std::log1p(1.0 / (pd * (pd - 2.0))));
  }

  ResidueCheck r;
  r.lhs = hl_factor_H(fk) / static_cast<double>(k) * std::exp(log_prod.value());
  r.rhs = 1.0 / (2.0 * ctx.C_value * static_cast<double>(euler_phi(q)));
  r.rel_err = std::abs(r.lhs - r.rhs) / r.rhs;
  return r;
}

}  // namespace gzlab
