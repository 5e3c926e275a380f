#include <doctest.h>

#include <cmath>

#include "gzlab/arith.hpp"
#include "gzlab/errors.hpp"
#include "support/oracles.hpp"

using namespace gzlab;

TEST_SUITE("arith") {
  TEST_CASE("sieve lambda matches trial division") {
    const auto sieve = build_sieve(200000);
    const auto ref = oracle::trial_lambda_table(200000);
    for (std::int64_t m = 1; m <= sieve.limit(); ++m) CHECK_MESSAGE(sieve.lambda(m) == doctest::Approx(ref[m]).epsilon(1e-15), m);
  }

  TEST_CASE("small lambda values") {
    const auto sieve = build_sieve(100);
    CHECK(sieve.lambda(1) == 0.0);
    CHECK(sieve.lambda(2) == doctest::Approx(std::log(2.0)));
    CHECK(sieve.lambda(9) == doctest::Approx(std::log(3.0)));
    CHECK(sieve.lambda(12) == 0.0);
    CHECK(sieve.lambda(97) == doctest::Approx(std::log(97.0)));
  }

  TEST_CASE("prime powers share a bit-identical lambda") {
    const auto sieve = build_sieve(1 << 20);
    for (std::int64_t p : {2, 3, 5, 7, 31, 1021}) {
      for (std::int64_t pk = p * p; pk <= sieve.limit(); pk *= p) CHECK(sieve.lambda(pk) == sieve.lambda(p));
    }
  }

  TEST_CASE("prime list and smallest prime factor") {
    const auto sieve = build_sieve(10000);
    CHECK(sieve.primes().size() == 1229);
    for (std::int64_t m = 2; m <= 10000; ++m) {
      const std::uint32_t p = sieve.spf(m);
      CHECK(m % p == 0);
      CHECK(is_prime_trial(p));
      CHECK(sieve.is_prime(m) == is_prime_trial(static_cast<std::uint64_t>(m)));
    }
    CHECK(primes_up_to(10000).size() == 1229);
  }

  TEST_CASE("sieve size limits") {
    CHECK_THROWS_AS((void)build_sieve(1), SizeError);
    CHECK_THROWS_AS((void)build_sieve(kMaxSieveLimit + 1), SizeError);
  }

  TEST_CASE("factorization round trip, with and without the sieve") {
    const auto sieve = build_sieve(100000);
    for (std::uint64_t n = 1; n <= 20000; ++n) {
      const auto a = factorize(n, &sieve);
      const auto b = factorize(n);
      CHECK(a.value() == n);
      CHECK(a.factors == b.factors);
      for (std::size_t i = 1; i < a.factors.size(); ++i) CHECK(a.factors[i - 1].prime < a.factors[i].prime);
    }
    CHECK(factorize(1).empty());
    // Outside the sieve falls back to trial division.
    const auto big = factorize(1'000'000'007ULL * 6, &sieve);
    CHECK(big.value() == 6'000'000'042ULL);
    CHECK(big.factors.back().prime == 1'000'000'007ULL);
    CHECK_THROWS_AS((void)factorize(0), DomainError);
  }

  TEST_CASE("Euler phi against the gcd count") {
    const auto sieve = build_sieve(5000);
    for (std::uint64_t q = 1; q <= 3000; ++q) {
      CHECK(euler_phi(q) == oracle::phi_by_gcd(q));
      CHECK(euler_phi(q, &sieve) == oracle::phi_by_gcd(q));
    }
  }

  TEST_CASE("powmod") {
    CHECK(powmod(2, 10, 1000) == 24);
    CHECK(powmod(3, 0, 7) == 1);
    const std::uint64_t p = 1'000'000'007ULL;
    CHECK(powmod(123456789, p - 1, p) == 1);
  }
}
