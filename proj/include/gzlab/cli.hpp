#pragma once

// Command-line front end. run() executes one validated configuration;
// main_entry() parses argv first.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace gzlab::cli {

enum class Command { sieve, gn, scan, sq, pchi, decompose, components, model, zeros, explicit_formula, compare };
enum class OutFormat { csv, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitWindow = 2;
inline constexpr int kExitUsage = 64;

struct RunConfig {
  Command command = Command::compare;
  std::optional<std::uint32_t> q;
  std::optional<double> N;
  std::optional<double> T;
  double delta = 0.5;
  std::int64_t prime_limit = 1'000'000;
  double cutoff_factor = 40.0;
  // Unset: csv for row-oriented commands, json for reports.
  std::optional<OutFormat> out_format;
  std::filesystem::path cache_dir = ".gzlab-cache";
  int threads = 0;  // 0: hardware concurrency

  std::optional<std::int64_t> n;     // gn
  std::optional<std::int64_t> from;  // sieve, gn, scan
  std::optional<std::int64_t> to;
  std::optional<std::string> chi;    // index vector "1" / "0,1" or a full id
  double zero_tol = 1e-8;
};

[[nodiscard]] std::string_view command_name(Command c);

// Reports go to out, warnings and errors to err.
[[nodiscard]] int run(const RunConfig& config, std::ostream& out, std::ostream& err);

[[nodiscard]] int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gzlab::cli
