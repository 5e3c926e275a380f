#include <doctest.h>

#include <json.hpp>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string_view>
#include <random>
#include <stdexcept>
#include <vector>

#include "gzlab/compensated.hpp"
#include "gzlab/format.hpp"
#include "gzlab/parallel.hpp"
#include "gzlab/simd.hpp"

using namespace gzlab;

namespace {

// Integer-valued doubles whose exact sum fits in __int128.
std::vector<double> integer_data(std::size_t n, unsigned seed, double scale) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(-(1LL << 40), 1LL << 40);
  std::vector<double> v(n);
  for (auto& x : v) x = static_cast<double>(dist(rng)) * scale;
  return v;
}

}  // namespace

TEST_SUITE("numerics") {
  TEST_CASE("TwoSum and TwoProduct are error free") {
    const TwoTerm s = two_sum(1e16, 1.0);
    CHECK(s.hi == 1e16);
    CHECK(s.lo == 1.0);
    const TwoTerm p = two_product(1.0 + 0x1p-30, 1.0 + 0x1p-30);
    CHECK(p.hi == 1.0 + 0x1p-29);
    CHECK(p.lo == 0x1p-60);
  }

  TEST_CASE("compensated sum recovers cancelled mass") {
    CompensatedSum s;
    for (double x : {1e16, 1.0, -1e16, 1.0}) s.add(x);
    CHECK(s.value() == 2.0);
    CompensatedSum a, b;
    a.add(1e16);
    b.add(3.0);
    b.add(-1e16);
    a.merge(b);
    CHECK(a.value() == 3.0);
  }

  TEST_CASE("scalar and AVX2 kernels agree with exact integer sums") {
    for (std::size_t n : {0u, 1u, 3u, 7u, 8u, 9u, 1000u, 4097u}) {
      const auto x = integer_data(n, 7 + n, 1.0);
      const auto y = integer_data(n, 99 + n, 1.0);
      __int128 exact_sum = 0, exact_dot = 0;
      for (std::size_t i = 0; i < n; ++i) {
        exact_sum += static_cast<__int128>(x[i]);
        exact_dot += static_cast<__int128>(x[i]) * static_cast<__int128>(y[i]);
      }
      CHECK(simd::scalar::sum(x) == static_cast<double>(exact_sum));
      CHECK(simd::scalar::dot(x, y) == static_cast<double>(exact_dot));
      if (simd::avx2::available()) {
        CHECK(simd::avx2::sum(x) == static_cast<double>(exact_sum));
        CHECK(simd::avx2::dot(x, y) == static_cast<double>(exact_dot));
      }
    }
  }

  TEST_CASE("scalar and AVX2 kernels agree on positive data") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (std::size_t n : {5u, 64u, 1001u, 100003u}) {
      std::vector<double> x(n), y(n);
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = u(rng) * std::exp(-static_cast<double>(i) / 1000.0);
        y[i] = u(rng);
      }
      const double s = simd::scalar::sum(x);
      const double d = simd::scalar::dot(x, y);
      if (simd::avx2::available()) {
        CHECK(simd::avx2::sum(x) == doctest::Approx(s).epsilon(1e-15));
        CHECK(simd::avx2::dot(x, y) == doctest::Approx(d).epsilon(1e-15));
      }
      CHECK(simd::sum(x) == doctest::Approx(s).epsilon(1e-15));
    }
  }

  TEST_CASE("scatter kernel equivalence") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 5.0);
    const std::size_t n = 1000;
    std::vector<double> b(n);
    std::vector<std::uint32_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) {
      b[i] = u(rng);
      pos[i] = static_cast<std::uint32_t>(3 * i + 1);
    }
    std::vector<double> h1(4000, 0.0), l1(4000, 0.0), h2(4000, 0.0), l2(4000, 0.0);
    for (double a : {1.5, 0.25, 7.0}) {
      simd::scalar::scatter_product_add(a, b, pos, 2, h1.data(), l1.data());
      simd::avx2::scatter_product_add(a, b, pos, 2, h2.data(), l2.data());
    }
    for (std::size_t i = 0; i < h1.size(); ++i) CHECK(h1[i] + l1[i] == h2[i] + l2[i]);
    CHECK(h1[6] + l1[6] == doctest::Approx((1.5 + 0.25 + 7.0) * b[1]));
  }

  TEST_CASE("environment override selects the scalar kernels") {
    const char* env = std::getenv("GZLAB_SIMD");
    if (env && std::string_view(env) == "scalar") CHECK(simd::active_isa() == simd::Isa::scalar);
  }

  TEST_CASE("forced ISA is honoured") {
    const auto before = simd::active_isa();
    simd::force_isa(simd::Isa::scalar);
    CHECK(simd::active_isa() == simd::Isa::scalar);
    CHECK(simd::isa_name(simd::Isa::scalar) == "scalar");
    simd::force_isa(before);
  }

  TEST_CASE("chunked loop visits every chunk once and rethrows") {
    for (int t : {1, 3, 8}) {
      parallel::set_threads(t);
      std::vector<std::atomic<int>> hits(1000);
      parallel::for_each_chunk(hits.size(), [&](std::size_t c) { hits[c]++; });
      for (auto& h : hits) CHECK(h.load() == 1);
      CHECK_THROWS_AS(parallel::for_each_chunk(100,
                                               [](std::size_t c) {
                                                 if (c == 42) throw std::runtime_error("boom");
                                               }),
                      std::runtime_error);
    }
    parallel::set_threads(0);
    CHECK(parallel::threads() == 1);
  }

  TEST_CASE("number formatting") {
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(1.20694896081) == "1.20694896081");
    CHECK(format_number(0.0001) == "0.0001");
    CHECK(format_number(0.00009) == "9e-05");
    CHECK(format_number(123456789012345.0) == "1.23456789012e+14");
    CHECK(format_number(-2.5) == "-2.5");
  }

  TEST_CASE("JSON writer output parses back") {
    JsonObject inner;
    inner.number("x", 1.5).string("s", "a\"b,c");
    std::vector<JsonObject> rows(2);
    rows[0].integer("i", 1);
    rows[1].integer("i", 2);
    JsonObject o;
    o.integer("n", 7).number("v", 1e-7).boolean("ok", true).number("bad", NAN).object("inner", inner).array("rows", rows);
    const auto j = nlohmann::json::parse(o.dump());
    CHECK(j["n"] == 7);
    CHECK(j["v"].get<double>() == doctest::Approx(1e-7));
    CHECK(j["ok"] == true);
    CHECK(j["bad"].is_null());
    CHECK(j["inner"]["s"] == "a\"b,c");
    CHECK(j["rows"].size() == 2);
    CHECK(j["rows"][1]["i"] == 2);
    CHECK(o.csv_header() == "n,v,ok,bad,inner.x,inner.s");
    CHECK(o.csv_row() == "7,1e-07,1,nan,1.5,\"a\"\"b,c\"");
  }

  TEST_CASE("CSV field quoting") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("q:4,idx:1") == "\"q:4,idx:1\"");
    CHECK(csv_field("say \"x\"") == "\"say \"\"x\"\"\"");
  }
}
