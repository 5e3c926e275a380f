#pragma once

// Integer arithmetic backbone: smallest-prime-factor sieve with the von
// Mangoldt function, factorization and Euler's totient.

#include <cstdint>
#include <span>
#include <vector>

namespace gzlab {

inline constexpr std::int64_t kMaxSieveLimit = std::int64_t{1} << 31;

class SieveTable {
 public:
  [[nodiscard]] std::int64_t limit() const noexcept { return limit_; }

  // Λ(m) in natural-log units; all powers of one prime share a bit-identical
  // value. Valid for 1 <= m <= limit().
  [[nodiscard]] double lambda(std::int64_t m) const noexcept { return lambda_[static_cast<std::size_t>(m)]; }

  // Smallest prime factor, spf(1) == 1.
  [[nodiscard]] std::uint32_t spf(std::int64_t m) const noexcept { return spf_[static_cast<std::size_t>(m)]; }

  [[nodiscard]] bool is_prime(std::int64_t m) const noexcept {
    return m >= 2 && spf_[static_cast<std::size_t>(m)] == static_cast<std::uint32_t>(m);
  }

  // Index m holds Λ(m); index 0 is unused and zero.
  [[nodiscard]] std::span<const double> lambda_table() const noexcept { return lambda_; }
  [[nodiscard]] std::span<const std::uint32_t> primes() const noexcept { return primes_; }

 private:
  friend SieveTable build_sieve(std::int64_t limit);

  std::int64_t limit_ = 0;
  std::vector<double> lambda_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

// Linear sieve over [1, limit]. Throws SizeError unless 2 <= limit <= 2^31.
[[nodiscard]] SieveTable build_sieve(std::int64_t limit);

struct PrimePower {
  std::uint64_t prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  std::vector<PrimePower> factors;  // strictly increasing primes

  [[nodiscard]] std::uint64_t value() const;
  [[nodiscard]] bool empty() const noexcept { return factors.empty(); }
};

// Canonical factorization; uses the sieve when n is inside it and trial
// division otherwise. Throws DomainError for n == 0.
[[nodiscard]] Factorization factorize(std::uint64_t n, const SieveTable* sieve = nullptr);

[[nodiscard]] std::uint64_t euler_phi(std::uint64_t n, const SieveTable* sieve = nullptr);

[[nodiscard]] bool is_prime_trial(std::uint64_t n);

// Plain Eratosthenes prime list, for products over primes that need no Λ.
[[nodiscard]] std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

[[nodiscard]] std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

}  // namespace gzlab
