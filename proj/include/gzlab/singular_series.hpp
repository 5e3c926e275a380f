#pragma once

// Hardy-Littlewood constant C = prod_{p>2} (1 - 1/(p-1)^2), the factor
// H(n) = prod_{p | n, p > 2} (1 + 1/(p-2)) and the singular series 2 C H(n).

#include <cstdint>
#include <memory>
#include <vector>

#include "gzlab/arith.hpp"

namespace gzlab {

struct SingularSeriesCtx {
  std::int64_t prime_limit = 0;
  double C_value = 0.0;
  // Relative truncation bound: C_value * (1 - tail_bound) <= C <= C_value.
  double tail_bound = 0.0;
  // Odd primes up to prime_limit, shared by every product truncated with this ctx.
  std::shared_ptr<const std::vector<std::uint32_t>> odd_primes;
};

// Throws DomainError for prime_limit < 1000.
[[nodiscard]] SingularSeriesCtx constant_C(std::int64_t prime_limit);

[[nodiscard]] double hl_factor_H(std::uint64_t n, const SieveTable& sieve);
[[nodiscard]] double hl_factor_H(const Factorization& f);

// 2 C H(n); defined for every n >= 1.
[[nodiscard]] double singular_series(std::uint64_t n, const SingularSeriesCtx& ctx,
                                     const SieveTable* sieve = nullptr);

struct ResidueCheck {
  double lhs = 0.0;  // (H(k)/k) prod_{p not | k, p <= P} (1 + 1/(p(p-2)))
  double rhs = 0.0;  // 1 / (2 C_P phi(q))
  double rel_err = 0.0;
};

// Residue of Z_q(s) at s = 1, computed from the Euler product and from C at
// the same truncation P. Throws DomainError if q has an odd prime factor
// above the truncation point.
[[nodiscard]] ResidueCheck residue_identity_check(std::uint64_t q, const SingularSeriesCtx& ctx);

// Least common multiple of 2 and q.
[[nodiscard]] constexpr std::uint64_t lcm2(std::uint64_t q) noexcept { return q % 2 == 0 ? q : 2 * q; }

}  // namespace gzlab
