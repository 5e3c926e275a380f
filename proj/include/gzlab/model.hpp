#pragma once

// Singular-series model of S(q): sum over even multiples n of q of
// 𝔖(n) n e^{-n/N}, compared with N^2 / phi(q); and the Dirichlet series
// Z_q(s) = sum_{n = 0 mod [2,q]} H(n) n^{-s}.

#include <cstdint>

#include "gzlab/arith.hpp"
#include "gzlab/format.hpp"
#include "gzlab/singular_series.hpp"

namespace gzlab {

struct ModelReport {
  std::uint32_t q = 1;
  double N = 0.0;
  double model_sum = 0.0;
  double main_term = 0.0;  // N^2 / phi(q)
  double rel_err = 0.0;
  double lemma_ratio = 0.0;  // rel_err / sqrt(q / N)
  double tail_bound = 0.0;   // relative bound on the terms beyond 40 N
};

// Sums over n = k, 2k, ... <= 40 N with k = lcm(2, q). Throws SizeError if
// the sieve does not reach 40 N, DomainError for q < 1 or N <= 0.
[[nodiscard]] ModelReport model_sum(std::uint32_t q, double N, const SingularSeriesCtx& ctx,
                                    const SieveTable& sieve);

// Sieve limit model_sum needs for this N.
[[nodiscard]] std::int64_t model_cutoff(double N);

[[nodiscard]] JsonObject to_json(const ModelReport& report);

struct ZqValues {
  double direct = 0.0;         // partial sum plus tail estimate
  double direct_partial = 0.0;  // sum over n <= cutoff
  double tail_estimate = 0.0;  // D cutoff^{1-s} / (s - 1), D the observed density of H
  double closed_form = 0.0;
  std::uint64_t cutoff = 0;
};

// Closed form H(k) k^{-s} zeta(s) prod_{p not | k, p <= P} (1 + 1/(p^s (p - 2))),
// valid for any real s > 1.
[[nodiscard]] double zq_closed_form(std::uint32_t q, double s, const SingularSeriesCtx& ctx);

// Both evaluations of Z_q(s); the direct series runs over n <= 10^7 / q.
// Throws DomainError for s < 1.05.
[[nodiscard]] ZqValues zq_eval(std::uint32_t q, double s, const SingularSeriesCtx& ctx);

}  // namespace gzlab
