#pragma once

// Report formatting shared by every CSV/JSON writer: 12 significant digits,
// scientific notation below 1e-4 in magnitude.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gzlab {

[[nodiscard]] std::string format_number(double x);

// Flat JSON object with insertion-ordered keys and preformatted values.
class JsonObject {
 public:
  JsonObject& number(std::string_view key, double v);
  JsonObject& integer(std::string_view key, std::int64_t v);
  JsonObject& string(std::string_view key, std::string_view v);
  JsonObject& boolean(std::string_view key, bool v);
  JsonObject& object(std::string_view key, const JsonObject& v);
  JsonObject& array(std::string_view key, const std::vector<JsonObject>& items);

  [[nodiscard]] std::string dump(int indent = 2) const;

  // One CSV record of the scalar entries; nested objects contribute their
  // entries as <key>.<inner key>, arrays are skipped. Booleans become 1/0.
  [[nodiscard]] std::string csv_header() const;
  [[nodiscard]] std::string csv_row() const;

 private:
  std::string dump_at(int indent, int depth) const;
  void flatten(std::string_view prefix, std::vector<std::pair<std::string, std::string>>& out) const;

  struct Entry {
    std::string key;
    std::string value;  // scalar literal, unused for nested objects
    std::string csv;    // CSV rendering of the scalar
    std::vector<JsonObject> nested;
    bool is_array = false;
  };
  std::vector<Entry> entries_;
};

[[nodiscard]] std::string json_quote(std::string_view s);

// RFC 4180 field quoting (only when needed).
[[nodiscard]] std::string csv_field(std::string_view s);

}  // namespace gzlab
