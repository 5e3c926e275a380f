#include "gzlab/lfunc.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gzlab/errors.hpp"

namespace gzlab {

namespace {

constexpr int kHurwitzCorrections = 20;
constexpr double kLineScanStep = 0.05;
constexpr double kRealScanStep = 0.005;
constexpr double kContourMaxStep = 0.1;
constexpr double kContourMinStep = 1e-5;
constexpr std::array<double, 4> kContourShifts = {0.0, 0.002, -0.002, 0.005};

int parity_shift(const Character& chi) { return chi.parity() == 1 ? 0 : 1; }

void require_non_principal(const Character& chi, const char* what) {
  if (chi.is_principal()) throw DomainError(std::string(what) + ": principal character not supported");
}

// Bisection on a sign change of g over [lo, hi]; g(lo) and g(hi) differ in sign.
template <class G>
double bisect(const G& g, double lo, double hi, double g_lo) {
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double g_mid = g(mid);
    if (g_mid == 0.0) return mid;
    if ((g_mid < 0) == (g_lo < 0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 1e-13 * std::max(1.0, std::abs(lo))) break;
  }
  return 0.5 * (lo + hi);
}

template <class G>
std::vector<double> sign_change_roots(const G& g, double lo, double hi, double step) {
  std::vector<double> roots;
  const int n = std::max(1, static_cast<int>(std::ceil((hi - lo) / step)));
  double x_prev = lo;
  double g_prev = g(lo);
  if (g_prev == 0.0) roots.push_back(lo);
  for (int i = 1; i <= n; ++i) {
    const double x = (i == n) ? hi : lo + (hi - lo) * i / n;
    const double gx = g(x);
    if (gx == 0.0) {
      roots.push_back(x);
    } else if (g_prev != 0.0 && (gx < 0) != (g_prev < 0)) {
      roots.push_back(bisect(g, x_prev, x, g_prev));
    }
    x_prev = x;
    g_prev = gx;
  }
  return roots;
}

// Argument change of f along the segment [za, zb], adaptively refined.
double segment_arg(const std::function<cplx(cplx)>& f, cplx za, cplx zb, cplx fa, cplx fb) {
  const cplx zm = 0.5 * (za + zb);
  const cplx fm = f(zm);
  if (fm == 0.0) throw ContourError("argument principle: contour hits a zero");
  const double d = std::arg(fb / fa);
  const double dl = std::arg(fm / fa);
  const double dr = std::arg(fb / fm);
  const double len = std::abs(zb - za);
  if (len <= kContourMaxStep && std::abs(d) < 0.5 && std::abs(dl + dr - d) < 1e-6) return d;
  if (len < kContourMinStep) {
    std::ostringstream msg;
    msg << "argument principle: contour passes too close to a zero near " << zm.real() << "+" << zm.imag() << "i";
    throw ContourError(msg.str());
  }
  return segment_arg(f, za, zm, fa, fm) + segment_arg(f, zm, zb, fm, fb);
}

double edge_arg(const std::function<cplx(cplx)>& f, cplx za, cplx zb) {
  const int pieces = std::max(1, static_cast<int>(std::ceil(std::abs(zb - za) / kContourMaxStep)));
  double total = 0.0;
  cplx z_prev = za;
  cplx f_prev = f(za);
  if (f_prev == 0.0) throw ContourError("argument principle: contour hits a zero");
  for (int i = 1; i <= pieces; ++i) {
    const cplx z = (i == pieces) ? zb : za + (zb - za) * (static_cast<double>(i) / pieces);
    const cplx fz = f(z);
    if (fz == 0.0) throw ContourError("argument principle: contour hits a zero");
    total += segment_arg(f, z_prev, z, f_prev, fz);
    z_prev = z;
    f_prev = fz;
  }
  return total;
}

}  // namespace

LValue L_eval(const Character& chi, cplx s) {
  if (s.real() < -2.0 || s.real() > 3.0 || std::abs(s.imag()) > 200.0)
    throw DomainError("L_eval: s outside Re s in [-2, 3], |Im s| <= 200");
  const std::uint32_t q = chi.q();
  const double qd = q;
  cplx acc = 0.0;
  for (std::uint32_t r : chi.group().units()) {
    const std::uint32_t a = r == 0 ? q : r;
    acc += chi(r) * hurwitz_zeta_regular(s, a / qd, kHurwitzCorrections);
  }
  if (chi.is_principal()) {
    if (std::abs(s - 1.0) < 1e-10) throw PoleError("L_eval: principal character has a pole at s = 1");
    acc += static_cast<double>(chi.group().size()) / (s - 1.0);
  }
  return {std::exp(-s * std::log(qd)) * acc, std::abs(s.imag()) > 60.0};
}

cplx L_value(const Character& chi, cplx s) { return L_eval(chi, s).value; }

cplx gauss_sum(const Character& chi) {
  const std::uint32_t q = chi.q();
  cplx tau = 0.0;
  for (std::uint32_t m = 1; m <= q; ++m) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(m % q) / q;
    tau += chi(m) * cplx(std::cos(theta), std::sin(theta));
  }
  return tau;
}

cplx root_number(const Character& chi) {
  const cplx i_a = parity_shift(chi) ? cplx(0.0, 1.0) : cplx(1.0, 0.0);
  return gauss_sum(chi) / (i_a * std::sqrt(static_cast<double>(chi.q())));
}

cplx completed_L(const Character& chi, cplx s) {
  const cplx half = 0.5 * (s + static_cast<double>(parity_shift(chi)));
  const double log_q_pi = std::log(chi.q() / std::numbers::pi);
  return std::exp(half * log_q_pi + log_gamma(half)) * L_value(chi, s);
}

LineValue rotated_line_value(const Character& chi, double t) {
  const cplx s(0.5, t);
  const cplx half = 0.5 * (s + static_cast<double>(parity_shift(chi)));
  const double phase = (half * std::log(chi.q() / std::numbers::pi) + log_gamma(half)).imag();
  const cplx w = std::sqrt(root_number(chi));
  const cplx l = L_value(chi, s);
  const cplx v = std::polar(1.0, phase) * l / w;
  return {v.real(), std::abs(v.imag()) / std::max(std::abs(l), 1e-300)};
}

int argument_principle_count(const std::function<cplx(cplx)>& f, double sigma0, double sigma1, double t0,
                             double t1) {
  const cplx c00(sigma0, t0), c10(sigma1, t0), c11(sigma1, t1), c01(sigma0, t1);
  const double total = edge_arg(f, c10, c11) + edge_arg(f, c11, c01) + edge_arg(f, c01, c00) + edge_arg(f, c00, c10);
  const double turns = total / (2.0 * std::numbers::pi);
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 0.1) throw ContourError("argument principle: winding number not integral");
  return static_cast<int>(rounded);
}

std::vector<double> real_zero_scan(const Character& chi, double lo, double hi) {
  if (!chi.is_real() || chi.is_principal())
    throw DomainError("real_zero_scan: needs a real non-principal character");
  if (!(0.0 < lo && lo < hi && hi < 1.0)) throw DomainError("real_zero_scan: need 0 < lo < hi < 1");
  auto g = [&chi](double sigma) { return L_value(chi, cplx(sigma, 0.0)).real(); };
  return sign_change_roots(g, lo, hi, kRealScanStep);
}

RealZeroProvider real_zero_provider() {
  return [](const Character& chi) { return real_zero_scan(chi, 0.02, 0.999); };
}

ZeroList find_zeros(const Character& chi, double T, double zero_tol) {
  require_non_principal(chi, "find_zeros");
  if (chi.q() > 100) throw DomainError("find_zeros: q above 100");
  if (!(T > 0.0 && T <= 60.0)) throw DomainError("find_zeros: T must lie in (0, 60]");
  if (!chi.is_primitive()) throw DomainError("find_zeros: character " + chi.id() + " is imprimitive");

  ZeroList out;
  out.chi_id = chi.id();
  out.q = chi.q();
  out.index.assign(chi.index().begin(), chi.index().end());
  out.T = T;
  out.zero_tol = zero_tol;

  auto line = [&chi](double t) { return rotated_line_value(chi, t).z; };
  auto f = [&chi](cplx s) { return L_value(chi, s); };

  // Zeros on the real axis inside the rectangle: the trivial zero at s = 0
  // for even chi, plus any real zero of a real character.
  int real_axis = 0;
  if (chi.is_real()) {
    auto g = [&chi](double sigma) { return L_value(chi, cplx(sigma, 0.0)).real(); };
    real_axis = static_cast<int>(sign_change_roots(g, -0.45, 1.45, kRealScanStep).size());
  } else if (chi.parity() == 1) {
    real_axis = 1;
  }

  for (double shift : kContourShifts) {
    const double top = T + std::abs(shift);
    int ap = 0;
    try {
      ap = argument_principle_count(f, -0.5, 1.5, -top, top);
    } catch (const ContourError&) {
      continue;
    }
    std::vector<double> gammas;
    double step = kLineScanStep;
    for (int refine = 0; refine < 3; ++refine, step /= 4.0) {
      gammas = sign_change_roots(line, -top, top, step);
      if (static_cast<int>(gammas.size()) + real_axis == ap) break;
    }
    out.rectangle_count = ap;
    out.reconciled_count = static_cast<int>(gammas.size()) + real_axis;
    if (out.reconciled_count != ap) {
      // Localize the discrepancy in unit-height strips before giving up.
      std::ostringstream msg;
      msg << "find_zeros: " << chi.id() << " argument principle counts " << ap << " zeros but "
          << out.reconciled_count << " were located;";
      for (double lo = -top; lo < top; lo += 1.0) {
        const double hi = std::min(top, lo + 1.0);
        try {
          const int strip = argument_principle_count(f, -0.5, 1.5, lo, hi);
          const auto found = std::count_if(gammas.begin(), gammas.end(), [&](double g) { return g >= lo && g < hi; });
          if (strip != found) msg << " strip [" << lo << ", " << hi << "] has " << strip << " vs " << found << ';';
        } catch (const ContourError&) {
          msg << " strip [" << lo << ", " << hi << "] unresolved;";
        }
      }
      throw IncompleteZeroListError(msg.str());
    }
    for (double g : gammas) {
      if (g <= 0.0 || g > T) continue;
      const double residual = std::abs(L_value(chi, cplx(0.5, g)));
      if (!(residual < zero_tol))
        throw IncompleteZeroListError("find_zeros: refined zero at gamma = " + std::to_string(g) +
                                      " leaves |L| = " + std::to_string(residual));
      out.zeros.push_back({0.5, g});
    }
    out.count_verified = true;
    return out;
  }
  throw ContourError("find_zeros: every contour placement passed too close to a zero");
}

int zero_count_region(const CharacterGroup& group, double alpha, double T, const std::optional<DesignatedZero>& exclude) {
  if (!(alpha >= 0.5 && alpha <= 1.0)) throw DomainError("zero_count_region: alpha must lie in [1/2, 1]");
  if (!(T >= 2.0)) throw DomainError("zero_count_region: T must be >= 2");
  if (group.q() > 50) throw DomainError("zero_count_region: q above 50");
  if (exclude) {
    if (exclude->chi.q() != group.q() || exclude->chi.is_principal() || !exclude->chi.is_real())
      throw DomainError("zero_count_region: designated zero needs a real non-principal character mod q");
    if (!(std::abs(L_value(exclude->chi, cplx(exclude->beta, 0.0))) < 1e-8))
      throw DomainError("zero_count_region: designated beta is not a zero of L(s, chi)");
  }

  int total = 0;
  for (const auto& chi : group.characters()) {
    if (chi.is_principal()) continue;
    auto f = [&chi](cplx s) { return L_value(chi, s); };
    const double left = alpha == 0.5 ? 0.45 : alpha;
    bool done = false;
    for (double shift : kContourShifts) {
      try {
        total += argument_principle_count(f, left - shift, 1.5, -(T + std::abs(shift)), T + std::abs(shift));
        done = true;
        break;
      } catch (const ContourError&) {
      }
    }
    if (!done) throw ContourError("zero_count_region: no clean contour for " + chi.id());
    if (exclude && exclude->chi == chi && exclude->beta >= alpha && exclude->beta < 1.0) --total;
  }
  return total;
}

ExplicitResidual explicit_formula_residual(const Character& chi, const SeriesParams& params, const SieveTable& sieve,
                                           const ZeroList& zeros, const ZeroList* conj_zeros, double c_expl) {
  require_non_principal(chi, "explicit_formula_residual");
  if (!zeros.count_verified) throw DomainError("explicit_formula_residual: zero list is not verified");
  if (zeros.chi_id != chi.id()) throw DomainError("explicit_formula_residual: zero list belongs to " + zeros.chi_id);
  if (!chi.is_real()) {
    if (!conj_zeros) throw DomainError("explicit_formula_residual: complex character needs the conjugate zero list");
    if (!conj_zeros->count_verified || conj_zeros->chi_id != chi.conj().id())
      throw DomainError("explicit_formula_residual: conjugate zero list unverified or mismatched");
  }

  const double log_n = std::log(params.N);
  auto term = [log_n](cplx rho) { return std::exp(log_gamma(rho) + rho * log_n); };

  cplx zero_sum = 0.0;
  for (const auto& z : zeros.zeros) {
    const cplx rho(z.beta, z.gamma);
    zero_sum += term(rho);
    if (chi.is_real()) zero_sum += term(std::conj(rho));
  }
  if (!chi.is_real())
    for (const auto& z : conj_zeros->zeros) zero_sum += term(cplx(z.beta, -z.gamma));

  ExplicitResidual r;
  r.P = P_chi(chi, params, sieve);
  r.zero_sum = zero_sum;
  r.residual = std::abs(r.P + zero_sum);
  r.bound = c_expl * std::sqrt(params.N) * log_n * log_n;
  // Dropped |gamma| > T: |Gamma(1/2 + it)| ~ sqrt(2 pi) e^{-pi t / 2} against
  // a zero density of log(q t / 2 pi) / (2 pi) on each side.
  const double T = zeros.T;
  const double density = std::log(std::max(std::exp(1.0), chi.q() * (T + 1.0) / (2.0 * std::numbers::pi))) /
                         (2.0 * std::numbers::pi);
  r.tail_estimate = 2.0 * std::sqrt(params.N) * density * std::sqrt(2.0 * std::numbers::pi) *
                    std::exp(-std::numbers::pi * T / 2.0) * (2.0 / std::numbers::pi);
  return r;
}

}  // namespace gzlab
