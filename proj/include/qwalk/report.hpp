#pragma once

// Report serialisation. JSON doubles are written with 17 significant digits
// so that repeated runs compare byte for byte and values round-trip exactly.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/pst.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

enum class OutputFormat { Json, Csv, Plain };
std::optional<OutputFormat> parse_format(std::string_view name);

std::string json_number(double x);  // non-finite values become null
std::string json_string(std::string_view s);
std::string json_array(const std::vector<std::string>& items);

/// Insertion-ordered JSON object builder.
class JsonObject {
 public:
  JsonObject& str(std::string_view key, std::string_view value);
  JsonObject& num(std::string_view key, double value);
  JsonObject& integer(std::string_view key, long long value);
  JsonObject& boolean(std::string_view key, bool value);
  JsonObject& raw(std::string_view key, std::string_view json);
  JsonObject& null(std::string_view key);
  std::string dump() const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_field(std::string_view s);
std::string to_csv(const Table& t);
/// Whitespace-aligned columns for terminals.
std::string to_plain(const Table& t);
/// %.17g rendering shared by CSV and plain output.
std::string format_double(double x);

/// {a, b, t, re, im, mag}
std::string amplitude_json(const Amplitude& amp);
/// {graph, a, b, tStar, fidelity, antipodal, source}; tStar is null when not found.
std::string verdict_json(std::string_view graph, const PstVerdict& v, std::string_view source);
Table verdict_table(std::string_view graph, const std::vector<PstVerdict>& verdicts, std::string_view source);

}  // namespace qwalk
