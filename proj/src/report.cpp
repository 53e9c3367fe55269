#include "qwalk/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace qwalk {

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "plain") return OutputFormat::Plain;
  return std::nullopt;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string json_number(double x) { return std::isfinite(x) ? format_double(x) : "null"; }

std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (char ch : s) {
    const auto c = static_cast<unsigned char>(ch);
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

std::string json_array(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
  return out + "]";
}

JsonObject& JsonObject::str(std::string_view key, std::string_view value) { return raw(key, json_string(value)); }
JsonObject& JsonObject::num(std::string_view key, double value) { return raw(key, json_number(value)); }
JsonObject& JsonObject::integer(std::string_view key, long long value) { return raw(key, std::to_string(value)); }
JsonObject& JsonObject::boolean(std::string_view key, bool value) { return raw(key, value ? "true" : "false"); }
JsonObject& JsonObject::null(std::string_view key) { return raw(key, "null"); }

JsonObject& JsonObject::raw(std::string_view key, std::string_view json) {
  fields_.emplace_back(std::string(key), std::string(json));
  return *this;
}

std::string JsonObject::dump() const {
  std::string out = "{";
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    if (i) out += ",";
    out += json_string(fields_[i].first) + ":" + fields_[i].second;
  }
  return out + "}";
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string to_csv(const Table& t) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_field(cells[i]);
    out += "\n";
  };
  line(t.columns);
  for (const auto& r : t.rows) line(r);
  return out;
}

std::string to_plain(const Table& t) {
  std::vector<std::size_t> width(t.columns.size(), 0);
  auto measure = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  };
  measure(t.columns);
  for (const auto& r : t.rows) measure(r);
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string l;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      l += cells[i];
      if (i + 1 < cells.size()) l += std::string(width[i] - cells[i].size() + 2, ' ');
    }
    out += l + "\n";
  };
  line(t.columns);
  for (const auto& r : t.rows) line(r);
  return out;
}

std::string amplitude_json(const Amplitude& amp) {
  return JsonObject()
      .integer("a", static_cast<long long>(amp.a.index))
      .integer("b", static_cast<long long>(amp.b.index))
      .num("t", amp.t)
      .num("re", amp.value.real())
      .num("im", amp.value.imag())
      .num("mag", amp.magnitude())
      .dump();
}

std::string verdict_json(std::string_view graph, const PstVerdict& v, std::string_view source) {
  JsonObject o;
  o.str("graph", graph).integer("a", static_cast<long long>(v.a.index)).integer("b", static_cast<long long>(v.b.index));
  if (v.found) o.num("tStar", v.t_star);
  else o.null("tStar");
  return o.num("t", v.t_star).boolean("found", v.found).num("fidelity", v.fidelity).boolean("antipodal", v.antipodal)
      .str("source", source)
      .dump();
}

Table verdict_table(std::string_view graph, const std::vector<PstVerdict>& verdicts, std::string_view source) {
  Table t{{"graph", "a", "b", "tStar", "fidelity", "antipodal", "source", "found", "t"}, {}};
  for (const auto& v : verdicts)
    t.rows.push_back({std::string(graph), std::to_string(v.a.index), std::to_string(v.b.index),
                      v.found ? format_double(v.t_star) : "", format_double(v.fidelity), v.antipodal ? "true" : "false",
                      std::string(source), v.found ? "true" : "false", format_double(v.t_star)});
  return t;
}

}  // namespace qwalk
