#pragma once

// The generating sum S(q) = sum_{n = 0 mod q} G(n) e^{-n/N}, evaluated by
// residue bucketing and through the character sums
// P(chi) = sum_m chi(m) Λ(m) e^{-m/N}.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gzlab/arith.hpp"
#include "gzlab/characters.hpp"
#include "gzlab/format.hpp"

namespace gzlab {

struct SeriesParams {
  std::uint32_t q = 1;
  double N = 0.0;
  std::int64_t cutoff_M = 0;
  // Upper bound on sum_{m > cutoff_M} Λ(m) e^{-m/N}.
  double tail_bound = 0.0;

  [[nodiscard]] bool N_at_least_q() const noexcept { return N >= q; }
  [[nodiscard]] bool N_at_least_q_squared() const noexcept { return N >= static_cast<double>(q) * q; }
};

// cutoff_M = ceil(cutoff_factor * N). Throws DomainError for q < 1, N <= 0 or
// cutoff_factor < 40.
[[nodiscard]] SeriesParams make_series_params(std::uint32_t q, double N, double cutoff_factor = 40.0);

// Explicit cutoff variant, used where a fixed truncation is wanted. Requires
// cutoff_M >= 40 N.
[[nodiscard]] SeriesParams make_series_params_with_cutoff(std::uint32_t q, double N, std::int64_t cutoff_M);

// Direct compensated sum over m <= cutoff_M. Throws SizeError if the sieve is short.
[[nodiscard]] std::complex<double> P_chi(const Character& chi, const SeriesParams& params, const SieveTable& sieve);

// P(chi) for every character of the group (group enumeration order), via
// residue-class buckets.
[[nodiscard]] std::vector<std::complex<double>> P_all(const CharacterGroup& group, const SeriesParams& params,
                                                      const SieveTable& sieve);

// sum over odd m1, m2 <= cutoff_M with m1 + m2 = 0 mod q of
// Λ(m1) Λ(m2) e^{-(m1+m2)/N}, without forming G(n).
[[nodiscard]] double S_direct(const SeriesParams& params, const SieveTable& sieve);

struct Decomposition {
  // (1/phi(q)) sum_chi chi(-1) |P(chi)|^2
  double character_side = 0.0;
  // Same pair sum as S_direct but over gcd(m1 m2, q) = 1 with no parity condition.
  double sigma_star = 0.0;
  double defect = 0.0;
  // |Im sum_chi chi(-1) P(chi)^2|; conjugate characters cancel it.
  double square_imag_defect = 0.0;
  // S_direct - sigma_star, from the pairs that only one of the two sums admits.
  double mismatch = 0.0;
};

[[nodiscard]] Decomposition decomposition_check(const SeriesParams& params, const CharacterGroup& group,
                                                const SieveTable& sieve);

struct SeriesReport {
  std::uint32_t q = 1;
  double N = 0.0;
  double S_direct = 0.0;
  double S0 = 0.0;
  double S1 = 0.0;
  double S_inf = 0.0;
  std::string chi1;
  int chi1_parity = 1;
  double epsilon_obs = 0.0;
  double decomposition_defect = 0.0;

  // Diagnostics kept out of the serialized schema.
  double P_chi1 = 0.0;
  double mismatch = 0.0;
  double sigma_star = 0.0;
  double square_imag_defect = 0.0;
  bool chi1_fallback = false;

  // phi S / N^2 - 1 - chi1(-1) (|P(chi1)| / N)^2, from the stored fields.
  [[nodiscard]] double recompute_epsilon(std::uint64_t phi) const;
};

// Throws DomainError if chi1 is principal or not real. Without chi1 (moduli
// with no real non-principal character) S1 is 0, chi1 is empty and
// chi1_parity is 0.
[[nodiscard]] SeriesReport components(const SeriesParams& params, const CharacterGroup& group,
                                      const SieveTable& sieve, const std::optional<Character>& chi1);

// JSON object with fields q,N,S_direct,S0,S1,S_inf,chi1,chi1_parity,epsilon_obs,decomposition_defect.
[[nodiscard]] JsonObject to_json(const SeriesReport& report);

}  // namespace gzlab
