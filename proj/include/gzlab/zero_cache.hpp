#pragma once

// On-disk cache of verified zero lists, one CSV file per (q, index vector,
// T, tolerance, format version).

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "gzlab/lfunc.hpp"

namespace gzlab {

inline constexpr int kZeroCacheVersion = 1;

// Header `q,chi,beta,gamma`; chi is the full character id.
void write_zero_csv(std::ostream& out, const ZeroList& list);

// Parses a cached list for chi and checks it: header, ids, ordering,
// 0 < gamma <= T and |L| < zero_tol at every zero. Returns nullopt with a
// reason in *why on any defect.
[[nodiscard]] std::optional<ZeroList> read_zero_csv(std::istream& in, const Character& chi, double T,
                                                    double zero_tol, std::string* why = nullptr);

// e.g. zeros_q4_idx1_T50_tol1e-08_v1.csv
[[nodiscard]] std::string zero_cache_filename(const Character& chi, double T, double zero_tol);

// GZLAB_CACHE_DIR if set and non-empty, otherwise the given directory.
[[nodiscard]] std::filesystem::path resolve_cache_dir(const std::filesystem::path& requested);

struct CachedZeros {
  ZeroList list;
  bool from_cache = false;
  std::string warning;  // set when a corrupt file was regenerated
  std::filesystem::path path;
};

// Serves the list from the cache when a valid file exists; otherwise runs
// find_zeros and writes the file.
[[nodiscard]] CachedZeros load_or_find_zeros(const Character& chi, double T, double zero_tol,
                                             const std::filesystem::path& cache_dir);

}  // namespace gzlab
