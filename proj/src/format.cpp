#include "gzlab/format.hpp"

#include <cmath>
#include <cstdio>

namespace gzlab {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buf[64];
  // %g switches to scientific exactly when the exponent is below -4.
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string json_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      default:
        out += c;
    }
  }
  out += '"';
  return out;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

JsonObject& JsonObject::number(std::string_view key, double v) {
  // JSON has no nan/inf literals.
  entries_.push_back({std::string(key), std::isfinite(v) ? format_number(v) : "null", format_number(v), {}});
  return *this;
}

JsonObject& JsonObject::integer(std::string_view key, std::int64_t v) {
  entries_.push_back({std::string(key), std::to_string(v), std::to_string(v), {}});
  return *this;
}

JsonObject& JsonObject::string(std::string_view key, std::string_view v) {
  entries_.push_back({std::string(key), json_quote(v), csv_field(v), {}});
  return *this;
}

JsonObject& JsonObject::boolean(std::string_view key, bool v) {
  entries_.push_back({std::string(key), v ? "true" : "false", v ? "1" : "0", {}});
  return *this;
}

JsonObject& JsonObject::object(std::string_view key, const JsonObject& v) {
  entries_.push_back({std::string(key), {}, {}, {v}});
  return *this;
}

JsonObject& JsonObject::array(std::string_view key, const std::vector<JsonObject>& items) {
  entries_.push_back({std::string(key), {}, {}, items, true});
  return *this;
}

std::string JsonObject::dump(int indent) const { return dump_at(indent, 0) + "\n"; }

std::string JsonObject::dump_at(int indent, int depth) const {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  std::string out = "{";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    out += i ? ",\n" : "\n";
    out += pad + json_quote(e.key) + ": ";
    if (e.is_array) {
      if (e.nested.empty()) {
        out += "[]";
        continue;
      }
      const std::string item_pad(static_cast<std::size_t>(indent * (depth + 2)), ' ');
      out += "[";
      for (std::size_t j = 0; j < e.nested.size(); ++j)
        out += (j ? ",\n" : "\n") + item_pad + e.nested[j].dump_at(indent, depth + 2);
      out += "\n" + pad + "]";
    } else {
      out += e.nested.empty() ? e.value : e.nested.front().dump_at(indent, depth + 1);
    }
  }
  out += entries_.empty() ? "}" : "\n" + close_pad + "}";
  return out;
}

void JsonObject::flatten(std::string_view prefix,
                         std::vector<std::pair<std::string, std::string>>& out) const {
  for (const auto& e : entries_) {
    if (e.is_array) continue;
    std::string key = prefix.empty() ? e.key : std::string(prefix) + "." + e.key;
    if (e.nested.empty())
      out.emplace_back(std::move(key), e.csv);
    else
      e.nested.front().flatten(key, out);
  }
}

std::string JsonObject::csv_header() const {
  std::vector<std::pair<std::string, std::string>> flat;
  flatten("", flat);
  std::string out;
  for (std::size_t i = 0; i < flat.size(); ++i) out += (i ? "," : "") + csv_field(flat[i].first);
  return out;
}

std::string JsonObject::csv_row() const {
  std::vector<std::pair<std::string, std::string>> flat;
  flatten("", flat);
  std::string out;
  for (std::size_t i = 0; i < flat.size(); ++i) out += (i ? "," : "") + flat[i].second;
  return out;
}

}  // namespace gzlab
