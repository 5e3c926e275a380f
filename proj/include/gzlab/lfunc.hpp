#pragma once

// Dirichlet L-functions for small moduli: evaluation through Hurwitz zeta,
// zeros on the critical line and the real segment, argument-principle zero
// counts, and the truncated explicit formula for P(chi).

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gzlab/arith.hpp"
#include "gzlab/characters.hpp"
#include "gzlab/series.hpp"
#include "gzlab/special.hpp"

namespace gzlab {

struct LValue {
  cplx value;
  bool accuracy_loss = false;  // |Im s| > 60
};

// L(s, chi) = q^{-s} sum_{a=1}^{q} chi(a) zeta(s, a/q). Requires Re s in
// [-2, 3] and |Im s| <= 200 (DomainError otherwise); PoleError for the
// principal character at s = 1.
[[nodiscard]] LValue L_eval(const Character& chi, cplx s);

// Shorthand for L_eval(chi, s).value.
[[nodiscard]] cplx L_value(const Character& chi, cplx s);

// Gauss sum tau(chi) = sum_{m=1}^{q} chi(m) e^{2 pi i m / q}.
[[nodiscard]] cplx gauss_sum(const Character& chi);

// Completed function (q/pi)^{(s+a)/2} Gamma((s+a)/2) L(s, chi), a = 0 for
// even chi and 1 for odd chi.
[[nodiscard]] cplx completed_L(const Character& chi, cplx s);

// tau(chi) / (i^a sqrt(q)); unimodular exactly for primitive chi.
[[nodiscard]] cplx root_number(const Character& chi);

struct LineValue {
  double z = 0.0;          // real rotated value on s = 1/2 + i t
  double imag_defect = 0.0;  // leftover imaginary part, relative to |L|
};

// Real-valued rotation of L(1/2 + i t, chi) for primitive chi; its sign
// changes are the zeros on the critical line.
[[nodiscard]] LineValue rotated_line_value(const Character& chi, double t);

struct ZeroPoint {
  double beta;
  double gamma;
};

struct ZeroList {
  std::string chi_id;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> index;
  double T = 0.0;
  double zero_tol = 0.0;
  std::vector<ZeroPoint> zeros;  // 0 < gamma <= T, ascending
  bool count_verified = false;
  // Argument-principle count over [-0.5, 1.5] x [-T, T] and the number of
  // zeros it was reconciled against (line zeros both ways, trivial zero at
  // s = 0 for even chi).
  int rectangle_count = 0;
  int reconciled_count = 0;
};

// Counts zeros of f inside the rectangle [sigma0, sigma1] x [t0, t1] by
// tracking the argument along the boundary. Throws ContourError when the
// boundary passes too close to a zero.
[[nodiscard]] int argument_principle_count(const std::function<cplx(cplx)>& f, double sigma0, double sigma1,
                                           double t0, double t1);

// Zeros with 0 < gamma <= T on the critical line for a primitive
// non-principal chi, q <= 100, T <= 60. Throws IncompleteZeroListError if
// the list cannot be reconciled with the argument principle.
[[nodiscard]] ZeroList find_zeros(const Character& chi, double T, double zero_tol = 1e-8);

// Sign changes of L(sigma, chi) on [lo, hi] for real non-principal chi,
// refined by bisection, ascending.
[[nodiscard]] std::vector<double> real_zero_scan(const Character& chi, double lo, double hi);

// Provider for exceptional_candidate scanning (0.02, 0.999).
[[nodiscard]] RealZeroProvider real_zero_provider();

struct DesignatedZero {
  Character chi;
  double beta;
};

// N(alpha, T): zeros with alpha <= beta < 1, |gamma| <= T over all
// non-principal chi mod q, excluding a designated real zero if given.
// The left edge sits at alpha, or at 0.45 when alpha = 1/2 so that line
// zeros are inside. Requires 1/2 <= alpha <= 1, T >= 2, q <= 50.
[[nodiscard]] int zero_count_region(const CharacterGroup& group, double alpha, double T,
                                    const std::optional<DesignatedZero>& exclude = std::nullopt);

struct ExplicitResidual {
  double residual = 0.0;  // |P(chi) + sum_{|gamma| <= T} Gamma(rho) N^rho|
  double bound = 0.0;     // C_expl sqrt(N) (log N)^2
  double tail_estimate = 0.0;
  cplx P{};
  cplx zero_sum{};
};

inline constexpr double kDefaultExplicitConstant = 10.0;

// For real chi the list's conjugates supply gamma < 0; complex chi needs the
// list of conj(chi) as well. Throws DomainError when a list is unverified.
[[nodiscard]] ExplicitResidual explicit_formula_residual(const Character& chi, const SeriesParams& params,
                                                         const SieveTable& sieve, const ZeroList& zeros,
                                                         const ZeroList* conj_zeros = nullptr,
                                                         double c_expl = kDefaultExplicitConstant);

}  // namespace gzlab
