#include "gzlab/arith.hpp"

#include <cmath>
#include <string>

#include "gzlab/errors.hpp"

namespace gzlab {

SieveTable build_sieve(std::int64_t limit) {
  if (limit < 2 || limit > kMaxSieveLimit)
    throw SizeError("sieve limit " + std::to_string(limit) + " outside [2, 2^31]");

  SieveTable t;
  t.limit_ = limit;
  const auto n = static_cast<std::size_t>(limit) + 1;
  t.spf_.assign(n, 0);
  t.lambda_.assign(n, 0.0);
  t.spf_[1] = 1;
  if (limit >= 2) t.primes_.reserve(static_cast<std::size_t>(1.3 * static_cast<double>(limit) / std::log(static_cast<double>(limit))) + 8);

  for (std::uint64_t i = 2; i < n; ++i) {
    if (t.spf_[i] == 0) {
      t.spf_[i] = static_cast<std::uint32_t>(i);
      t.primes_.push_back(static_cast<std::uint32_t>(i));
      t.lambda_[i] = std::log(static_cast<double>(i));
    } else {
      // Composite: a prime power p^k (k >= 2) inherits Λ from p^(k-1).
      const std::uint32_t p = t.spf_[i];
      const std::uint64_t r = i / p;
      if (t.spf_[r] == p && t.lambda_[r] != 0.0) t.lambda_[i] = t.lambda_[r];
    }
    const std::uint32_t spf_i = t.spf_[i];
    for (std::uint32_t p : t.primes_) {
      if (p > spf_i) break;
      const std::uint64_t m = i * p;
      if (m >= n) break;
      t.spf_[m] = p;
    }
  }
  return t;
}

std::uint64_t Factorization::value() const {
  std::uint64_t v = 1;
  for (const auto& [p, e] : factors)
    for (int i = 0; i < e; ++i) v *= p;
  return v;
}

Factorization factorize(std::uint64_t n, const SieveTable* sieve) {
  if (n == 0) throw DomainError("factorize: n must be >= 1");
  Factorization f;
  auto push = [&f](std::uint64_t p) {
    if (!f.factors.empty() && f.factors.back().prime == p)
      ++f.factors.back().exponent;
    else
      f.factors.push_back({p, 1});
  };
  if (sieve && n <= static_cast<std::uint64_t>(sieve->limit())) {
    while (n > 1) {
      const std::uint64_t p = sieve->spf(static_cast<std::int64_t>(n));
      push(p);
      n /= p;
    }
    return f;
  }
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      push(p);
      n /= p;
    }
  }
  if (n > 1) push(n);
  return f;
}

std::uint64_t euler_phi(std::uint64_t n, const SieveTable* sieve) {
  std::uint64_t phi = 1;
  for (const auto& [p, e] : factorize(n, sieve).factors) {
    phi *= p - 1;
    for (int i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<char> composite(static_cast<std::size_t>(limit) + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return out;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 result = 1;
  unsigned __int128 b = base % mod;
  while (exp) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace gzlab
