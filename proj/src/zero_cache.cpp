#include "gzlab/zero_cache.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "gzlab/errors.hpp"
#include "gzlab/format.hpp"

namespace gzlab {

namespace {

constexpr const char* kHeader = "q,chi,beta,gamma";

// Splits one CSV record; quoted fields may contain commas and doubled quotes.
std::optional<std::vector<std::string>> split_csv(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          fields.back() += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) return std::nullopt;
  return fields;
}

std::optional<double> parse_double(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<ZeroList> fail(std::string* why, std::string reason) {
  if (why) *why = std::move(reason);
  return std::nullopt;
}

}  // namespace

void write_zero_csv(std::ostream& out, const ZeroList& list) {
  out << kHeader << '\n';
  const std::string chi = csv_field(list.chi_id);
  for (const auto& z : list.zeros)
    out << list.q << ',' << chi << ',' << format_number(z.beta) << ',' << format_number(z.gamma) << '\n';
}

std::optional<ZeroList> read_zero_csv(std::istream& in, const Character& chi, double T, double zero_tol,
                                      std::string* why) {
  std::string line;
  if (!std::getline(in, line) || line != kHeader) return fail(why, "bad header");
  ZeroList list;
  list.chi_id = chi.id();
  list.q = chi.q();
  list.index.assign(chi.index().begin(), chi.index().end());
  list.T = T;
  list.zero_tol = zero_tol;
  const std::string q_text = std::to_string(chi.q());
  double prev = 0.0;
  while (std::getline(in, line)) {
    const auto fields = split_csv(line);
    if (!fields || fields->size() != 4) return fail(why, "malformed row: " + line);
    if ((*fields)[0] != q_text || (*fields)[1] != list.chi_id) return fail(why, "row for another character");
    const auto beta = parse_double((*fields)[2]);
    const auto gamma = parse_double((*fields)[3]);
    if (!beta || !gamma) return fail(why, "non-numeric row: " + line);
    if (!(*gamma > prev && *gamma <= T)) return fail(why, "zeros out of order or out of range");
    const double residual = std::abs(L_value(chi, cplx(*beta, *gamma)));
    if (!(residual < zero_tol)) return fail(why, "cached zero fails |L| < tol at gamma = " + (*fields)[3]);
    list.zeros.push_back({*beta, *gamma});
    prev = *gamma;
  }
  list.count_verified = true;
  return list;
}

std::string zero_cache_filename(const Character& chi, double T, double zero_tol) {
  std::ostringstream name;
  name << "zeros_q" << chi.q() << "_idx";
  const auto idx = chi.index();
  for (std::size_t i = 0; i < idx.size(); ++i) name << (i ? "-" : "") << idx[i];
  name << "_T" << format_number(T) << "_tol" << format_number(zero_tol) << "_v" << kZeroCacheVersion << ".csv";
  return name.str();
}

std::filesystem::path resolve_cache_dir(const std::filesystem::path& requested) {
  if (const char* env = std::getenv("GZLAB_CACHE_DIR"); env && *env) return env;
  return requested;
}

CachedZeros load_or_find_zeros(const Character& chi, double T, double zero_tol,
                               const std::filesystem::path& cache_dir) {
  CachedZeros out;
  out.path = cache_dir / zero_cache_filename(chi, T, zero_tol);
  if (std::ifstream in(out.path); in) {
    std::string why;
    if (auto list = read_zero_csv(in, chi, T, zero_tol, &why)) {
      out.list = std::move(*list);
      out.from_cache = true;
      return out;
    }
    out.warning = "corrupt zero cache " + out.path.string() + " (" + why + "); regenerating";
  }
  out.list = find_zeros(chi, T, zero_tol);
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  // Write to a temporary name and rename so readers never see a partial file.
  const auto tmp = std::filesystem::path(out.path.string() + ".tmp");
  {
    std::ofstream file(tmp, std::ios::trunc);
    if (!file) throw Error("cannot write zero cache " + tmp.string());
    write_zero_csv(file, out.list);
  }
  std::filesystem::rename(tmp, out.path);
  return out;
}

}  // namespace gzlab
