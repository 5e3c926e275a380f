#include "gzlab/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <ostream>
#include <thread>
#include <vector>

#include "gzlab/arith.hpp"
#include "gzlab/characters.hpp"
#include "gzlab/compensated.hpp"
#include "gzlab/errors.hpp"
#include "gzlab/format.hpp"
#include "gzlab/goldbach.hpp"
#include "gzlab/lfunc.hpp"
#include "gzlab/model.hpp"
#include "gzlab/parallel.hpp"
#include "gzlab/series.hpp"
#include "gzlab/singular_series.hpp"
#include "gzlab/zero_cache.hpp"

namespace gzlab::cli {

namespace {

constexpr double kMaxZeroHeight = 60.0;
// Rows printed by `sieve` unless --to is given.
constexpr std::int64_t kDefaultSieveRows = 1000;

// A report is either a single record or a table of rows with shared metadata.
struct Report {
  JsonObject meta;
  std::vector<JsonObject> rows;
  bool tabular = false;
};

void emit(const Report& r, OutFormat fmt, std::ostream& out) {
  if (fmt == OutFormat::json) {
    JsonObject o = r.meta;
    if (r.tabular) o.array("rows", r.rows);
    out << o.dump();
    return;
  }
  if (!r.tabular) {
    out << r.meta.csv_header() << '\n' << r.meta.csv_row() << '\n';
    return;
  }
  if (r.rows.empty()) return;
  out << r.rows.front().csv_header() << '\n';
  for (const auto& row : r.rows) out << row.csv_row() << '\n';
}

OutFormat default_format(Command c) {
  switch (c) {
    case Command::sieve:
    case Command::gn:
    case Command::scan:
    case Command::pchi:
    case Command::zeros:
      return OutFormat::csv;
    default:
      return OutFormat::json;
  }
}

template <class T>
T need(const std::optional<T>& v, const char* flag, Command c) {
  if (!v) throw DomainError(std::string(command_name(c)) + ": " + flag + " is required");
  return *v;
}

std::uint32_t need_q(const RunConfig& cfg) {
  const std::uint32_t q = need(cfg.q, "--q", cfg.command);
  if (q < 1) throw DomainError("--q must be >= 1");
  return q;
}

double need_N(const RunConfig& cfg) {
  const double N = need(cfg.N, "--N", cfg.command);
  if (!(N > 0.0) || !std::isfinite(N)) throw DomainError("--N must be positive");
  return N;
}

double need_T(const RunConfig& cfg) {
  const double T = need(cfg.T, "--T", cfg.command);
  if (!(T > 0.0 && T <= kMaxZeroHeight)) throw DomainError("--T must lie in (0, 60]");
  return T;
}

void check_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("--delta must lie in (0, 1)");
}

Character select_character(const CharacterGroup& g, const std::string& text) {
  if (text.rfind("q:", 0) == 0) {
    const CharacterId id = parse_character_id(text);
    if (id.q != g.q()) throw DomainError("--chi modulus " + std::to_string(id.q) + " differs from --q");
    return g.character(id.index);
  }
  return g.character(parse_index_vector(text));
}

// The modulus comes from --q, or from a full id given to --chi.
std::uint32_t modulus_for_chi(const RunConfig& cfg) {
  if (!cfg.q && cfg.chi && cfg.chi->rfind("q:", 0) == 0) return parse_character_id(*cfg.chi).q;
  return need_q(cfg);
}

SieveTable sieve_for(double reach) {
  const double limit = std::ceil(reach);
  if (limit > static_cast<double>(kMaxSieveLimit))
    throw SizeError("required sieve limit " + format_number(limit) + " exceeds 2^31");
  return build_sieve(std::max<std::int64_t>(2, static_cast<std::int64_t>(limit)));
}

std::optional<Character> chi1_for(const CharacterGroup& g, bool& fallback) {
  fallback = false;
  if (g.q() < 3) return std::nullopt;
  const ExceptionalCandidate cand = exceptional_candidate(g, real_zero_provider());
  fallback = cand.fallback;
  return cand.character;
}

JsonObject series_flags(const SeriesParams& p) {
  JsonObject o;
  o.boolean("N_at_least_q", p.N_at_least_q()).boolean("N_at_least_q_squared", p.N_at_least_q_squared());
  return o;
}

Report do_sieve(const RunConfig& cfg) {
  const double N = need_N(cfg);
  const SieveTable sieve = sieve_for(N);
  const std::int64_t from = cfg.from.value_or(1);
  const std::int64_t to = cfg.to.value_or(std::min(sieve.limit(), kDefaultSieveRows));
  if (from < 1 || to < from || to > sieve.limit()) throw DomainError("sieve: need 1 <= --from <= --to <= --N");
  Report r;
  r.tabular = true;
  CompensatedSum psi;
  for (std::int64_t m = 2; m <= sieve.limit(); ++m) psi.add(sieve.lambda(m));
  r.meta.integer("limit", sieve.limit())
      .integer("prime_count", static_cast<std::int64_t>(sieve.primes().size()))
      .number("psi", psi.value());
  for (std::int64_t m = from; m <= to; ++m) {
    JsonObject row;
    row.integer("m", m).number("lambda", sieve.lambda(m));
    r.rows.push_back(std::move(row));
  }
  return r;
}

Report do_gn(const RunConfig& cfg) {
  std::int64_t from = 0, to = 0;
  if (cfg.n) {
    from = to = *cfg.n;
  } else {
    from = need(cfg.from, "--n or --from", cfg.command);
    to = need(cfg.to, "--to", cfg.command);
  }
  if (from < 2 || to < from) throw DomainError("gn: need 2 <= n");
  const SieveTable sieve = sieve_for(static_cast<double>(to));
  Report r;
  r.tabular = true;
  r.meta.integer("n_from", from).integer("n_to", to);
  if (from == to) {
    JsonObject row;
    row.integer("n", from).number("G", goldbach_G(from, sieve));
    r.rows.push_back(std::move(row));
    return r;
  }
  const auto all = goldbach_G_all(to, sieve);
  for (std::int64_t n = from; n <= to; ++n) {
    JsonObject row;
    row.integer("n", n).number("G", all[static_cast<std::size_t>(n)]);
    r.rows.push_back(std::move(row));
  }
  return r;
}

int do_scan(const RunConfig& cfg, OutFormat fmt, std::ostream& out) {
  const std::int64_t from = need(cfg.from, "--from", cfg.command);
  const std::int64_t to = need(cfg.to, "--to", cfg.command);
  check_delta(cfg.delta);
  const SingularSeriesCtx ctx = constant_C(cfg.prime_limit);
  const SieveTable sieve = sieve_for(static_cast<double>(to));
  const RatioScan scan = ratio_scan(from, to, cfg.delta, sieve, ctx);
  if (fmt == OutFormat::csv) {
    write_csv(out, scan);
    return kExitOk;
  }
  std::vector<JsonObject> violations;
  for (std::int64_t n : scan.violations) {
    JsonObject v;
    v.integer("n", n);
    violations.push_back(std::move(v));
  }
  JsonObject o;
  o.integer("n_from", scan.n_from)
      .integer("n_to", scan.n_to)
      .number("delta", scan.delta)
      .integer("count", static_cast<std::int64_t>(scan.records.size()))
      .integer("violation_count", static_cast<std::int64_t>(scan.violations.size()))
      .number("min_ratio", scan.min_ratio)
      .number("max_ratio", scan.max_ratio)
      .number("mean_ratio", scan.mean_ratio(scan.n_from, scan.n_to))
      .array("violations", violations);
  out << o.dump();
  return kExitOk;
}

Report do_sq(const RunConfig& cfg) {
  const SeriesParams p = make_series_params(need_q(cfg), need_N(cfg), cfg.cutoff_factor);
  const SieveTable sieve = sieve_for(static_cast<double>(p.cutoff_M));
  Report r;
  r.meta.integer("q", p.q)
      .number("N", p.N)
      .integer("cutoff_M", p.cutoff_M)
      .number("S_direct", S_direct(p, sieve))
      .object("flags", series_flags(p));
  return r;
}

Report do_pchi(const RunConfig& cfg) {
  const SeriesParams p = make_series_params(modulus_for_chi(cfg), need_N(cfg), cfg.cutoff_factor);
  const CharacterGroup g = build_group(p.q);
  const SieveTable sieve = sieve_for(static_cast<double>(p.cutoff_M));
  Report r;
  r.tabular = true;
  r.meta.integer("q", p.q).number("N", p.N).integer("cutoff_M", p.cutoff_M);
  auto add = [&r](const Character& chi, std::complex<double> v) {
    JsonObject row;
    row.string("chi", chi.id())
        .integer("parity", chi.parity())
        .number("re", v.real())
        .number("im", v.imag())
        .number("abs", std::abs(v));
    r.rows.push_back(std::move(row));
  };
  if (cfg.chi) {
    const Character chi = select_character(g, *cfg.chi);
    add(chi, P_chi(chi, p, sieve));
  } else {
    const auto chars = g.characters();
    const auto P = P_all(g, p, sieve);
    for (std::size_t i = 0; i < chars.size(); ++i) add(chars[i], P[i]);
  }
  return r;
}

Report do_decompose(const RunConfig& cfg) {
  const SeriesParams p = make_series_params(need_q(cfg), need_N(cfg), cfg.cutoff_factor);
  const CharacterGroup g = build_group(p.q);
  const SieveTable sieve = sieve_for(static_cast<double>(p.cutoff_M));
  const Decomposition d = decomposition_check(p, g, sieve);
  Report r;
  r.meta.integer("q", p.q)
      .number("N", p.N)
      .number("character_side", d.character_side)
      .number("sigma_star", d.sigma_star)
      .number("defect", d.defect)
      .number("defect_over_N2", d.defect / (p.N * p.N))
      .number("mismatch", d.mismatch)
      .number("square_imag_defect", d.square_imag_defect);
  return r;
}

Report do_components(const RunConfig& cfg) {
  const SeriesParams p = make_series_params(need_q(cfg), need_N(cfg), cfg.cutoff_factor);
  const CharacterGroup g = build_group(p.q);
  const SieveTable sieve = sieve_for(static_cast<double>(p.cutoff_M));
  bool fallback = false;
  std::optional<Character> chi1;
  if (cfg.chi) {
    chi1 = select_character(g, *cfg.chi);
  } else {
    chi1 = chi1_for(g, fallback);
  }
  Report r;
  r.meta = to_json(components(p, g, sieve, chi1));
  return r;
}

Report do_model(const RunConfig& cfg) {
  const std::uint32_t q = need_q(cfg);
  const double N = need_N(cfg);
  const SingularSeriesCtx ctx = constant_C(cfg.prime_limit);
  const SieveTable sieve = sieve_for(static_cast<double>(model_cutoff(N)));
  Report r;
  r.meta = to_json(model_sum(q, N, ctx, sieve));
  return r;
}

JsonObject zero_json(const ZeroList& z) {
  std::vector<JsonObject> zeros;
  for (const auto& p : z.zeros) {
    JsonObject o;
    o.number("beta", p.beta).number("gamma", p.gamma);
    zeros.push_back(std::move(o));
  }
  JsonObject o;
  o.integer("q", z.q)
      .string("chi", z.chi_id)
      .number("T", z.T)
      .number("zero_tol", z.zero_tol)
      .boolean("count_verified", z.count_verified)
      .integer("count", static_cast<std::int64_t>(z.zeros.size()))
      .array("zeros", zeros);
  return o;
}

ZeroList cached_zeros(const Character& chi, double T, const RunConfig& cfg, std::ostream& err) {
  const CachedZeros c = load_or_find_zeros(chi, T, cfg.zero_tol, resolve_cache_dir(cfg.cache_dir));
  if (!c.warning.empty()) err << "warning: " << c.warning << '\n';
  if (c.from_cache) err << "zeros for " << chi.id() << " served from cache " << c.path.string() << '\n';
  return c.list;
}

int do_zeros(const RunConfig& cfg, OutFormat fmt, std::ostream& out, std::ostream& err) {
  const CharacterGroup g = build_group(modulus_for_chi(cfg));
  const Character chi = select_character(g, need(cfg.chi, "--chi", cfg.command));
  const ZeroList z = cached_zeros(chi, need_T(cfg), cfg, err);
  if (fmt == OutFormat::csv)
    write_zero_csv(out, z);
  else
    out << zero_json(z).dump();
  return kExitOk;
}

Report do_explicit(const RunConfig& cfg, std::ostream& err) {
  const SeriesParams p = make_series_params(modulus_for_chi(cfg), need_N(cfg), cfg.cutoff_factor);
  const CharacterGroup g = build_group(p.q);
  const Character chi = select_character(g, need(cfg.chi, "--chi", cfg.command));
  const double T = need_T(cfg);
  const ZeroList z = cached_zeros(chi, T, cfg, err);
  std::optional<ZeroList> zc;
  if (!chi.is_real()) zc = cached_zeros(chi.conj(), T, cfg, err);
  const SieveTable sieve = sieve_for(static_cast<double>(p.cutoff_M));
  const ExplicitResidual e = explicit_formula_residual(chi, p, sieve, z, zc ? &*zc : nullptr);
  Report r;
  r.meta.integer("q", p.q)
      .string("chi", chi.id())
      .number("N", p.N)
      .number("T", T)
      .integer("zero_count", static_cast<std::int64_t>(z.zeros.size()))
      .number("P_re", e.P.real())
      .number("P_im", e.P.imag())
      .number("residual", e.residual)
      .number("bound", e.bound)
      .number("residual_over_sqrtN", e.residual / std::sqrt(p.N))
      .number("residual_over_N", e.residual / p.N)
      .number("tail_estimate", e.tail_estimate);
  return r;
}

int do_compare(const RunConfig& cfg, OutFormat fmt, std::ostream& out) {
  check_delta(cfg.delta);
  const SeriesParams p = make_series_params(need_q(cfg), need_N(cfg), cfg.cutoff_factor);
  const CharacterGroup g = build_group(p.q);
  const SingularSeriesCtx ctx = constant_C(cfg.prime_limit);
  // One sieve serves both sides.
  const SieveTable sieve =
      sieve_for(std::max(static_cast<double>(p.cutoff_M), static_cast<double>(model_cutoff(p.N))));
  bool fallback = false;
  const std::optional<Character> chi1 = chi1_for(g, fallback);
  const SeriesReport s = components(p, g, sieve, chi1);
  const ModelReport m = model_sum(p.q, p.N, ctx, sieve);
  const double R = s.S_direct / m.model_sum;
  const bool in_window = cfg.delta < R && R < 2.0 - cfg.delta;

  Report r;
  r.meta.integer("q", p.q)
      .number("N", p.N)
      .number("delta", cfg.delta)
      .number("R", R)
      .boolean("in_window", in_window)
      .boolean("N_at_least_q", p.N_at_least_q())
      .boolean("N_at_least_q_squared", p.N_at_least_q_squared())
      .boolean("chi1_fallback", fallback)
      .object("series", to_json(s))
      .object("model", to_json(m));
  emit(r, fmt, out);
  return in_window ? kExitOk : kExitWindow;
}

}  // namespace

std::string_view command_name(Command c) {
  switch (c) {
    case Command::sieve:
      return "sieve";
    case Command::gn:
      return "gn";
    case Command::scan:
      return "scan";
    case Command::sq:
      return "sq";
    case Command::pchi:
      return "pchi";
    case Command::decompose:
      return "decompose";
    case Command::components:
      return "components";
    case Command::model:
      return "model";
    case Command::zeros:
      return "zeros";
    case Command::explicit_formula:
      return "explicit";
    case Command::compare:
      return "compare";
  }
  return "?";
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.threads < 0) throw DomainError("--threads must be >= 1");
    if (cfg.cutoff_factor < 40.0) throw DomainError("--cutoff-factor must be >= 40");
    if (cfg.prime_limit < 1000) throw DomainError("--prime-limit must be >= 1000");
    if (!(cfg.zero_tol > 0.0)) throw DomainError("--tol must be positive");
    parallel::set_threads(cfg.threads > 0 ? cfg.threads
                                          : static_cast<int>(std::max(1u, std::thread::hardware_concurrency())));
    const OutFormat fmt = cfg.out_format.value_or(default_format(cfg.command));
    switch (cfg.command) {
      case Command::sieve:
        emit(do_sieve(cfg), fmt, out);
        return kExitOk;
      case Command::gn:
        emit(do_gn(cfg), fmt, out);
        return kExitOk;
      case Command::scan:
        return do_scan(cfg, fmt, out);
      case Command::sq:
        emit(do_sq(cfg), fmt, out);
        return kExitOk;
      case Command::pchi:
        emit(do_pchi(cfg), fmt, out);
        return kExitOk;
      case Command::decompose:
        emit(do_decompose(cfg), fmt, out);
        return kExitOk;
      case Command::components:
        emit(do_components(cfg), fmt, out);
        return kExitOk;
      case Command::model:
        emit(do_model(cfg), fmt, out);
        return kExitOk;
      case Command::zeros:
        return do_zeros(cfg, fmt, out, err);
      case Command::explicit_formula:
        emit(do_explicit(cfg, err), fmt, out);
        return kExitOk;
      case Command::compare:
        return do_compare(cfg, fmt, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Goldbach / Dirichlet L-function numerics"};
  app.require_subcommand(1);
  RunConfig cfg;

  // Typed holders; CLI11 fills them only when the flag appears.
  std::uint32_t q = 0;
  double N = 0.0, T = 0.0;
  std::int64_t n = 0, from = 0, to = 0;
  std::string chi, out_format;

  enum Flag : unsigned {
    kQ = 1, kN = 2, kT = 4, kDelta = 8, kPrimeLimit = 16, kCutoff = 32, kCache = 64, kNn = 128, kRange = 256,
    kChi = 512, kTol = 1024
  };
  struct Subcommand {
    Command cmd;
    const char* help;
    unsigned flags;
  };
  const std::vector<Subcommand> specs = {
      {Command::sieve, "von Mangoldt table for m in [from, to] (sieve up to N)", kN | kRange},
      {Command::gn, "G(n) for one n or a range", kNn | kRange},
      {Command::scan, "Hardy-Littlewood ratio scan over even n", kRange | kDelta | kPrimeLimit},
      {Command::sq, "S(q) by direct double sum", kQ | kN | kCutoff},
      {Command::pchi, "P(chi) for every character mod q, or one", kQ | kN | kCutoff | kChi},
      {Command::decompose, "orthogonality decomposition check", kQ | kN | kCutoff},
      {Command::components, "S0 / S1 / S_inf split of S(q)", kQ | kN | kCutoff | kChi},
      {Command::model, "singular-series model sum", kQ | kN | kPrimeLimit},
      {Command::zeros, "zeros of L(s, chi) on the critical line up to T", kQ | kChi | kT | kCache | kTol},
      {Command::explicit_formula, "explicit-formula residual for P(chi)", kQ | kN | kChi | kT | kCutoff | kCache | kTol},
      {Command::compare, "S(q) against the model sum, with the ratio window", kQ | kN | kDelta | kPrimeLimit | kCutoff},
  };

  std::vector<std::pair<CLI::App*, Command>> subs;
  std::vector<CLI::Option*> opt_q, opt_N, opt_T, opt_n, opt_from, opt_to, opt_chi, opt_out;
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(std::string(command_name(s.cmd)), s.help);
    subs.emplace_back(sub, s.cmd);
    opt_out.push_back(sub->add_option("--out", out_format, "csv or json")->check(CLI::IsMember({"csv", "json"})));
    sub->add_option("--threads", cfg.threads, "worker threads (default: all cores)")->check(CLI::PositiveNumber);
    if (s.flags & kQ) opt_q.push_back(sub->add_option("--q", q, "modulus")->check(CLI::PositiveNumber));
    if (s.flags & kN) opt_N.push_back(sub->add_option("--N", N, "scale N")->check(CLI::PositiveNumber));
    if (s.flags & kT) opt_T.push_back(sub->add_option("--T", T, "zero height"));
    if (s.flags & kDelta) sub->add_option("--delta", cfg.delta, "window half-width parameter")->capture_default_str();
    if (s.flags & kPrimeLimit) sub->add_option("--prime-limit", cfg.prime_limit, "prime truncation for C")->capture_default_str();
    if (s.flags & kCutoff) sub->add_option("--cutoff-factor", cfg.cutoff_factor, "prime-sum cutoff / N (>= 40)")->capture_default_str();
    if (s.flags & kCache) sub->add_option("--cache-dir", cfg.cache_dir, "zero cache directory")->capture_default_str();
    if (s.flags & kTol) sub->add_option("--tol", cfg.zero_tol, "zero tolerance")->capture_default_str();
    if (s.flags & kNn) opt_n.push_back(sub->add_option("--n", n, "even n"));
    if (s.flags & kRange) {
      opt_from.push_back(sub->add_option("--from", from, "first value"));
      opt_to.push_back(sub->add_option("--to", to, "last value"));
    }
    if (s.flags & kChi) opt_chi.push_back(sub->add_option("--chi", chi, "index vector (e.g. 1 or 0,1) or q:<q>,idx:<...>"));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto given = [](const std::vector<CLI::Option*>& opts) {
    for (const auto* o : opts)
      if (o->count() > 0) return true;
    return false;
  };
  for (const auto& [sub, cmd] : subs)
    if (sub->parsed()) cfg.command = cmd;
  if (given(opt_q)) cfg.q = q;
  if (given(opt_N)) cfg.N = N;
  if (given(opt_T)) cfg.T = T;
  if (given(opt_n)) cfg.n = n;
  if (given(opt_from)) cfg.from = from;
  if (given(opt_to)) cfg.to = to;
  if (given(opt_chi)) cfg.chi = chi;
  if (given(opt_out)) cfg.out_format = out_format == "json" ? OutFormat::json : OutFormat::csv;
  return run(cfg, out, err);
}

}  // namespace gzlab::cli
