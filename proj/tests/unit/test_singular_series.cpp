#include <doctest.h>

#include <cmath>

#include "gzlab/arith.hpp"
#include "gzlab/errors.hpp"
#include "gzlab/singular_series.hpp"
#include "support/oracles.hpp"

using namespace gzlab;

namespace {

// prod over odd p | n of (p - 1)/(p - 2), by trial division.
double H_oracle(std::uint64_t n) {
  double h = 1.0;
  for (std::uint64_t p = 3; p <= n; p += 2) {
    if (n % p) continue;
    if (!is_prime_trial(p)) continue;
    h *= (p - 1.0) / (p - 2.0);
  }
  return h;
}

}  // namespace

TEST_SUITE("singular_series") {
  TEST_CASE("C at 10^6 against a 10^8 product within the truncation bound") {
    const auto ctx = constant_C(1'000'000);
    const double deep = oracle::twin_constant(100'000'000);
    CHECK(ctx.C_value >= deep);
    CHECK((ctx.C_value - deep) / ctx.C_value <= ctx.tail_bound);
    CHECK(ctx.C_value == doctest::Approx(0.6601618158).epsilon(1e-6));
    CHECK(ctx.tail_bound == doctest::Approx(1.0 / 999999.0));
  }

  TEST_CASE("C is decreasing in the truncation point") {
    CHECK(constant_C(1000).C_value > constant_C(10000).C_value);
    CHECK(constant_C(10000).C_value > constant_C(100000).C_value);
    CHECK_THROWS_AS((void)constant_C(999), DomainError);
  }

  TEST_CASE("H(n) against trial division") {
    const auto sieve = build_sieve(5000);
    for (std::uint64_t n = 1; n <= 3000; ++n) {
      CHECK(hl_factor_H(n, sieve) == doctest::Approx(H_oracle(n)).epsilon(1e-14));
      CHECK(hl_factor_H(factorize(n)) == doctest::Approx(H_oracle(n)).epsilon(1e-14));
    }
    CHECK(hl_factor_H(2, sieve) == 1.0);
    CHECK(hl_factor_H(6, sieve) == doctest::Approx(2.0));
    CHECK(hl_factor_H(30, sieve) == doctest::Approx(2.0 * 4.0 / 3.0));
  }

  TEST_CASE("singular series is 2 C H(n)") {
    const auto ctx = constant_C(100000);
    const auto sieve = build_sieve(1000);
    CHECK(singular_series(4, ctx, &sieve) == doctest::Approx(2.0 * ctx.C_value));
    CHECK(singular_series(6, ctx, &sieve) == doctest::Approx(4.0 * ctx.C_value));
    CHECK(singular_series(1'000'003ULL * 2, ctx) == doctest::Approx(2.0 * ctx.C_value * 1'000'002.0 / 1'000'001.0));
  }

  TEST_CASE("residue identity holds for every q up to 1000") {
    const auto ctx = constant_C(1'000'000);
    for (std::uint64_t q = 1; q <= 1000; ++q) {
      const auto r = residue_identity_check(q, ctx);
      CHECK_MESSAGE(r.rel_err < 1e-10, q);
      CHECK(r.rhs == doctest::Approx(1.0 / (2.0 * ctx.C_value * static_cast<double>(euler_phi(q)))));
    }
  }

  TEST_CASE("residue identity refuses q with a prime above the truncation") {
    const auto ctx = constant_C(1000);
    CHECK_THROWS_AS((void)residue_identity_check(1009, ctx), DomainError);
  }

  TEST_CASE("lcm with 2") {
    CHECK(lcm2(1) == 2);
    CHECK(lcm2(3) == 6);
    CHECK(lcm2(4) == 4);
    CHECK(lcm2(15) == 30);
  }
}
