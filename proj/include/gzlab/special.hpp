#pragma once

#include <complex>

namespace gzlab {

using cplx = std::complex<double>;

// log Gamma(z) by the Lanczos approximation (g = 7, 9 terms) with reflection
// for Re z < 1/2. Any branch of the imaginary part; exp() of it is Gamma(z).
[[nodiscard]] cplx log_gamma(cplx z);
[[nodiscard]] cplx gamma(cplx z);

// Hurwitz zeta sum_{n >= 0} (n + a)^{-s}, 0 < a <= 1, by Euler-Maclaurin
// with `corrections` Bernoulli terms (at most 30). Throws PoleError at s = 1.
[[nodiscard]] cplx hurwitz_zeta(cplx s, double a, int corrections = 20);

// zeta(s, a) - 1/(s - 1): entire in s, equal to -digamma(a) at s = 1.
[[nodiscard]] cplx hurwitz_zeta_regular(cplx s, double a, int corrections = 20);

// Riemann zeta for real s != 1, Euler-Maclaurin with 6 correction terms.
[[nodiscard]] double riemann_zeta(double s);

}  // namespace gzlab
