#include "gzlab/series.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "gzlab/compensated.hpp"
#include "gzlab/errors.hpp"
#include "gzlab/simd.hpp"

namespace gzlab {

namespace {

void require_reach(const SeriesParams& params, const SieveTable& sieve, const char* what) {
  if (params.cutoff_M > sieve.limit())
    throw SizeError(std::string(what) + ": sieve limit " + std::to_string(sieve.limit()) +
                    " below cutoff " + std::to_string(params.cutoff_M));
}

// Prime powers m <= cutoff_M with weight Λ(m) e^{-m/N}, m ascending.
struct WeightedPrimePowers {
  std::vector<std::uint32_t> m;
  std::vector<double> w;
};

WeightedPrimePowers weights(const SeriesParams& params, const SieveTable& sieve) {
  WeightedPrimePowers out;
  for (std::int64_t m = 2; m <= params.cutoff_M; ++m) {
    const double l = sieve.lambda(m);
    if (l == 0.0) continue;
    out.m.push_back(static_cast<std::uint32_t>(m));
    out.w.push_back(l * std::exp(-static_cast<double>(m) / params.N));
  }
  return out;
}

enum class Filter { all, odd, coprime, odd_coprime, odd_noncoprime, even_coprime };

bool admits(Filter f, std::uint32_t m, std::uint32_t q) {
  const bool odd = m % 2 != 0;
  const bool cop = std::gcd(m, q) == 1;
  switch (f) {
    case Filter::all:
      return true;
    case Filter::odd:
      return odd;
    case Filter::coprime:
      return cop;
    case Filter::odd_coprime:
      return odd && cop;
    case Filter::odd_noncoprime:
      return odd && !cop;
    case Filter::even_coprime:
      return !odd && cop;
  }
  return false;
}

// B(a) = sum over admitted m = a mod q of the weights.
std::vector<double> buckets(const WeightedPrimePowers& wp, std::uint32_t q, Filter f) {
  std::vector<CompensatedSum> acc(q);
  for (std::size_t i = 0; i < wp.m.size(); ++i)
    if (admits(f, wp.m[i], q)) acc[wp.m[i] % q].add(wp.w[i]);
  std::vector<double> out(q);
  for (std::uint32_t a = 0; a < q; ++a) out[a] = acc[a].value();
  return out;
}

// sum_a X(a) Y(-a mod q): the pair sum over m1 + m2 = 0 mod q.
double pair_sum(const std::vector<double>& x, const std::vector<double>& y) {
  const auto q = static_cast<std::uint32_t>(x.size());
  std::vector<double> y_neg(q);
  for (std::uint32_t a = 0; a < q; ++a) y_neg[a] = y[(q - a) % q];
  return simd::dot(x, y_neg);
}

std::vector<std::complex<double>> P_from_buckets(const CharacterGroup& group, const std::vector<double>& b_all) {
  std::vector<std::complex<double>> out;
  const auto chars = group.characters();
  out.reserve(chars.size());
  for (const auto& chi : chars) {
    CompensatedSum re, im;
    for (std::uint32_t a : group.units()) {
      re.add_product(chi(a).real(), b_all[a]);
      im.add_product(chi(a).imag(), b_all[a]);
    }
    out.emplace_back(re.value(), im.value());
  }
  return out;
}

}  // namespace

SeriesParams make_series_params_with_cutoff(std::uint32_t q, double N, std::int64_t cutoff_M) {
  if (q < 1) throw DomainError("series: q must be >= 1");
  if (!(N > 0.0) || !std::isfinite(N)) throw DomainError("series: N must be positive");
  if (static_cast<double>(cutoff_M) < 40.0 * N) throw DomainError("series: cutoff_M must be >= 40 N");
  SeriesParams p;
  p.q = q;
  p.N = N;
  p.cutoff_M = cutoff_M;
  const double M = static_cast<double>(cutoff_M);
  // sum_{m > M} log(m) e^{-m/N} <= e^{1/N} N e^{-M/N} (log M + N/M)
  p.tail_bound = std::exp(1.0 / N) * N * std::exp(-M / N) * (std::log(M) + N / M);
  return p;
}

SeriesParams make_series_params(std::uint32_t q, double N, double cutoff_factor) {
  if (!(cutoff_factor >= 40.0)) throw DomainError("series: cutoff factor must be >= 40");
  if (!(N > 0.0) || !std::isfinite(N)) throw DomainError("series: N must be positive");
  return make_series_params_with_cutoff(q, N, static_cast<std::int64_t>(std::ceil(cutoff_factor * N)));
}

std::complex<double> P_chi(const Character& chi, const SeriesParams& params, const SieveTable& sieve) {
  require_reach(params, sieve, "P_chi");
  CompensatedSum re, im;
  for (std::int64_t m = 2; m <= params.cutoff_M; ++m) {
    const double l = sieve.lambda(m);
    if (l == 0.0) continue;
    const auto v = chi(static_cast<std::uint64_t>(m));
    if (v == 0.0) continue;
    const double w = l * std::exp(-static_cast<double>(m) / params.N);
    re.add_product(v.real(), w);
    im.add_product(v.imag(), w);
  }
  return {re.value(), im.value()};
}

std::vector<std::complex<double>> P_all(const CharacterGroup& group, const SeriesParams& params,
                                        const SieveTable& sieve) {
  require_reach(params, sieve, "P_all");
  if (group.q() != params.q) throw DomainError("P_all: group modulus differs from params.q");
  return P_from_buckets(group, buckets(weights(params, sieve), params.q, Filter::all));
}

double S_direct(const SeriesParams& params, const SieveTable& sieve) {
  require_reach(params, sieve, "S_direct");
  const auto b = buckets(weights(params, sieve), params.q, Filter::odd);
  return pair_sum(b, b);
}

Decomposition decomposition_check(const SeriesParams& params, const CharacterGroup& group, const SieveTable& sieve) {
  require_reach(params, sieve, "decomposition_check");
  if (group.q() != params.q) throw DomainError("decomposition_check: group modulus differs from params.q");
  const std::uint32_t q = params.q;
  const auto wp = weights(params, sieve);
  const auto P = P_from_buckets(group, buckets(wp, q, Filter::all));
  const auto chars = group.characters();

  Decomposition d;
  CompensatedSum side, sq_im;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const double sign = chars[i].parity();
    side.add(sign * std::norm(P[i]));
    const std::complex<double> sq = P[i] * P[i];
    sq_im.add(sign * sq.imag());
  }
  const double phi = group.size();
  d.character_side = side.value() / phi;
  d.square_imag_defect = std::abs(sq_im.value());

  const auto cop = buckets(wp, q, Filter::coprime);
  d.sigma_star = pair_sum(cop, cop);
  d.defect = std::abs(d.character_side - d.sigma_star);

  // odd pairs = U x U + 2 U x A' + A' x A'; coprime pairs = U x U + 2 U x B' + B' x B'
  // with U odd and coprime, A' odd and not coprime, B' even and coprime.
  const auto u = buckets(wp, q, Filter::odd_coprime);
  const auto a_extra = buckets(wp, q, Filter::odd_noncoprime);
  const auto b_extra = buckets(wp, q, Filter::even_coprime);
  CompensatedSum mismatch;
  mismatch.add(2.0 * pair_sum(u, a_extra));
  mismatch.add(pair_sum(a_extra, a_extra));
  mismatch.add(-2.0 * pair_sum(u, b_extra));
  mismatch.add(-pair_sum(b_extra, b_extra));
  d.mismatch = mismatch.value();
  return d;
}

double SeriesReport::recompute_epsilon(std::uint64_t phi) const {
  const double p = std::abs(P_chi1) / N;
  return static_cast<double>(phi) * S_direct / (N * N) - 1.0 - chi1_parity * p * p;
}

SeriesReport components(const SeriesParams& params, const CharacterGroup& group, const SieveTable& sieve,
                        const std::optional<Character>& chi1) {
  if (chi1) {
    if (chi1->is_principal()) throw DomainError("components: chi1 must be non-principal");
    if (!chi1->is_real()) throw DomainError("components: chi1 must be real");
    if (chi1->q() != params.q) throw DomainError("components: modulus mismatch");
  }
  if (group.q() != params.q) throw DomainError("components: modulus mismatch");
  require_reach(params, sieve, "components");

  const auto wp = weights(params, sieve);
  const auto P = P_from_buckets(group, buckets(wp, params.q, Filter::all));
  const auto chars = group.characters();
  const double phi = group.size();

  SeriesReport r;
  r.q = params.q;
  r.N = params.N;
  r.chi1 = chi1 ? chi1->id() : std::string();
  r.chi1_parity = chi1 ? chi1->parity() : 0;
  CompensatedSum rest;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const double norm = std::norm(P[i]);
    if (chars[i].is_principal()) {
      r.S0 = norm / phi;
    } else if (chi1 && chars[i] == *chi1) {
      r.S1 = chi1->parity() * norm / phi;
      r.P_chi1 = P[i].real();
    } else {
      rest.add(chars[i].parity() * norm);
    }
  }
  r.S_inf = rest.value() / phi;

  const Decomposition d = decomposition_check(params, group, sieve);
  r.decomposition_defect = d.defect;
  r.mismatch = d.mismatch;
  r.sigma_star = d.sigma_star;
  r.square_imag_defect = d.square_imag_defect;
  r.S_direct = S_direct(params, sieve);
  r.epsilon_obs = r.recompute_epsilon(group.size());
  return r;
}

JsonObject to_json(const SeriesReport& r) {
  JsonObject o;
  o.integer("q", r.q)
      .number("N", r.N)
      .number("S_direct", r.S_direct)
      .number("S0", r.S0)
      .number("S1", r.S1)
      .number("S_inf", r.S_inf)
      .string("chi1", r.chi1)
      .integer("chi1_parity", r.chi1_parity)
      .number("epsilon_obs", r.epsilon_obs)
      .number("decomposition_defect", r.decomposition_defect);
  return o;
}

}  // namespace gzlab
