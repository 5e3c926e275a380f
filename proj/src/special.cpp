#include "gzlab/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "gzlab/errors.hpp"

namespace gzlab {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr int kMaxCorrections = 30;

// B_{2k} / (2k)! = (-1)^{k+1} 2 zeta(2k) / (2 pi)^{2k}, k = 1..30.
const std::array<double, kMaxCorrections + 1>& bernoulli_ratios() {
  static const auto table = [] {
    std::array<double, kMaxCorrections + 1> c{};
    const double two_pi = 2.0 * std::numbers::pi;
    for (int k = 1; k <= kMaxCorrections; ++k) {
      double z2k;
      if (k == 1) {
        z2k = std::numbers::pi * std::numbers::pi / 6.0;
      } else if (k == 2) {
        z2k = std::pow(std::numbers::pi, 4) / 90.0;
      } else {
        // Terms fall off at least as n^-6; summed smallest first.
        z2k = 0.0;
        for (int n = 2000; n >= 1; --n) z2k += std::pow(static_cast<double>(n), -2.0 * k);
      }
      c[static_cast<std::size_t>(k)] = (k % 2 ? 2.0 : -2.0) * z2k / std::pow(two_pi, 2.0 * k);
    }
    return c;
  }();
  return table;
}

// (e^z - 1) / z
cplx expm1_over(cplx z) {
  if (std::abs(z) < 1e-5) return 1.0 + z * (0.5 + z / 6.0);
  return (std::exp(z) - 1.0) / z;
}

// Finite part shared by both Hurwitz variants: the direct sum plus the
// Euler-Maclaurin corrections, excluding the x^{1-s}/(s-1) term.
// Returns the sum; x receives N + a.
cplx hurwitz_core(cplx s, double a, int corrections, double& x) {
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("hurwitz_zeta: a must lie in (0, 1]");
  if (corrections < 1 || corrections > kMaxCorrections)
    throw DomainError("hurwitz_zeta: corrections must lie in [1, 30]");
  // x >= (|s| + 2K) / 2 keeps successive correction ratios below 1/pi^2.
  const int n_terms = std::max(20, static_cast<int>(std::ceil((std::abs(s) + 2.0 * corrections) / 2.0)));
  cplx sum = 0.0;
  for (int n = n_terms - 1; n >= 0; --n) sum += std::exp(-s * std::log(static_cast<double>(n) + a));
  x = n_terms + a;
  const double log_x = std::log(x);
  const cplx x_pow = std::exp(-s * log_x);  // x^{-s}
  sum += 0.5 * x_pow;
  const auto& c = bernoulli_ratios();
  cplx poch = s;               // s (s+1) ... (s + 2k - 2)
  cplx x_term = x_pow / x;     // x^{-s-2k+1}
  const double inv_x2 = 1.0 / (x * x);
  for (int k = 1; k <= corrections; ++k) {
    sum += c[static_cast<std::size_t>(k)] * poch * x_term;
    poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
    x_term *= inv_x2;
  }
  return sum;
}

}  // namespace

cplx log_gamma(cplx z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    throw PoleError("log_gamma: pole at non-positive integer");
  if (z.real() < 0.5) {
    const cplx sin_pz = std::sin(std::numbers::pi * z);
    return std::log(std::numbers::pi) - std::log(sin_pz) - log_gamma(1.0 - z);
  }
  z -= 1.0;
  cplx acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) acc += kLanczos[i] / (z + static_cast<double>(i));
  const cplx t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(acc);
}

cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

cplx hurwitz_zeta(cplx s, double a, int corrections) {
  if (std::abs(s - 1.0) < 1e-14) throw PoleError("hurwitz_zeta: pole at s = 1");
  double x = 0.0;
  const cplx core = hurwitz_core(s, a, corrections, x);
  return core + std::exp((1.0 - s) * std::log(x)) / (s - 1.0);
}

cplx hurwitz_zeta_regular(cplx s, double a, int corrections) {
  double x = 0.0;
  const cplx core = hurwitz_core(s, a, corrections, x);
  // (x^{1-s} - 1) / (s - 1) = -log(x) E((1 - s) log x)
  const double log_x = std::log(x);
  return core - log_x * expm1_over((1.0 - s) * log_x);
}

double riemann_zeta(double s) { return hurwitz_zeta(cplx(s, 0.0), 1.0, 6).real(); }

}  // namespace gzlab
