#include <doctest.h>

#include <json.hpp>

#include <cmath>

#include "gzlab/errors.hpp"
#include "gzlab/model.hpp"
#include "gzlab/parallel.hpp"
#include "gzlab/special.hpp"

using namespace gzlab;

namespace {

const SingularSeriesCtx& ctx() {
  static const SingularSeriesCtx c = constant_C(1'000'000);
  return c;
}

const SieveTable& sieve() {
  static const SieveTable s = build_sieve(4'000'000);
  return s;
}

}  // namespace

TEST_SUITE("model") {
  TEST_CASE("Riemann zeta") {
    CHECK(riemann_zeta(2.0) == doctest::Approx(M_PI * M_PI / 6.0).epsilon(1e-13));
    CHECK(riemann_zeta(4.0) == doctest::Approx(std::pow(M_PI, 4) / 90.0).epsilon(1e-13));
    // 1/(s-1) + gamma - gamma_1 (s-1) + O((s-1)^2), Stieltjes constants.
    CHECK(riemann_zeta(1.05) == doctest::Approx(20.0 + 0.5772156649 + 0.0728158455 * 0.05).epsilon(1e-6));
  }

  TEST_CASE("model sum against a plain loop over even multiples of q") {
    const std::uint32_t q = 6;
    const double N = 500.0;
    long double ref = 0.0L;
    for (std::uint64_t n = 2; n <= 20000; ++n)
      if (n % 2 == 0 && n % q == 0) ref += hl_factor_H(n, sieve()) * n * std::exp(-static_cast<long double>(n) / N);
    const auto r = model_sum(q, N, ctx(), sieve());
    CHECK(r.model_sum == doctest::Approx(2.0 * ctx().C_value * static_cast<double>(ref)).epsilon(1e-13));
    CHECK(r.main_term == doctest::Approx(N * N / 2.0));
    CHECK(r.rel_err == doctest::Approx(std::abs(r.model_sum - r.main_term) / r.main_term));
    CHECK(r.lemma_ratio == doctest::Approx(r.rel_err / std::sqrt(q / N)));
    CHECK(r.tail_bound < 1e-12);
  }

  TEST_CASE("model sum examples") {
    CHECK(model_sum(1, 1e4, ctx(), sieve()).rel_err < std::sqrt(1.0 / 1e4));
    double prev = 1.0;
    for (std::uint32_t q : {1u, 3u, 8u})
      for (double N : {1e3, 1e4, 1e5}) {
        const auto r = model_sum(q, N, ctx(), sieve());
        if (N == 1e3) prev = 1.0;
        CHECK(r.rel_err < prev);
        prev = r.rel_err;
      }
  }

  TEST_CASE("model sum shrinks along a divisibility chain") {
    const double N = 1e4;
    const double a = model_sum(1, N, ctx(), sieve()).model_sum;
    const double b = model_sum(3, N, ctx(), sieve()).model_sum;
    const double c = model_sum(15, N, ctx(), sieve()).model_sum;
    CHECK(a >= b);
    CHECK(b >= c);
  }

  TEST_CASE("model sum grid at desk scale") {
    for (std::uint32_t q = 1; q <= 50; ++q) {
      const double N = 100.0 * q;
      const double v = static_cast<double>(euler_phi(q)) * model_sum(q, N, ctx(), sieve()).model_sum / (N * N);
      CHECK_MESSAGE(v >= 0.9, q);
      CHECK_MESSAGE(v <= 1.1, q);
    }
  }

  TEST_CASE("model sum does not depend on the thread count") {
    parallel::set_threads(1);
    const double one = model_sum(3, 1e5, ctx(), sieve()).model_sum;
    parallel::set_threads(8);
    const double eight = model_sum(3, 1e5, ctx(), sieve()).model_sum;
    CHECK(one == eight);
  }

  TEST_CASE("model preconditions and JSON") {
    CHECK_THROWS_AS((void)model_sum(3, 1e6, ctx(), sieve()), SizeError);
    CHECK_THROWS_AS((void)model_sum(0, 1e3, ctx(), sieve()), DomainError);
    const auto r = model_sum(3, 1e3, ctx(), sieve());
    const auto j = nlohmann::ordered_json::parse(to_json(r).dump());
    const std::vector<std::string> keys = {"q", "N", "model_sum", "main_term", "rel_err", "lemma_ratio"};
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) CHECK(it.key() == keys[i]);
    CHECK(i == keys.size());
    CHECK(j["model_sum"].get<double>() == doctest::Approx(r.model_sum).epsilon(1e-11));
  }

  TEST_CASE("Z_q: direct series against the closed form") {
    const auto v1 = zq_eval(1, 2.0, ctx());
    CHECK(v1.direct == doctest::Approx(v1.closed_form).epsilon(1e-6));
    const auto v3 = zq_eval(3, 1.5, ctx());
    CHECK(v3.direct == doctest::Approx(v3.closed_form).epsilon(1e-4));
    CHECK(v3.cutoff % 6 == 0);
    CHECK_THROWS_AS((void)zq_eval(3, 1.01, ctx()), DomainError);
  }

  TEST_CASE("Z_q residue approached from the right") {
    for (std::uint32_t q : {1u, 3u, 4u}) {
      const double residue = residue_identity_check(q, ctx()).rhs;
      double prev_gap = INFINITY;
      for (double s : {1.5, 1.25, 1.125, 1.0625}) {
        const double gap = std::abs((s - 1.0) * zq_closed_form(q, s, ctx()) - residue);
        CHECK(gap < prev_gap);
        prev_gap = gap;
      }
      CHECK(prev_gap / residue < 0.1);
    }
  }
}

#include "support/fixtures.hpp"

TEST_CASE("model sum error constants from the fixture" * doctest::test_suite("model")) {
  const auto q3 = model_sum(3, 1e5, ctx(), sieve());
  CHECK(q3.rel_err < fixture::kModelFactor * fixture::kModelRatioQ3 * std::sqrt(3.0 / 1e5));
  const auto q1 = model_sum(1, 1e4, ctx(), sieve());
  CHECK(q1.rel_err < fixture::kModelConstantQ1 * std::sqrt(1.0 / 1e4));
}
