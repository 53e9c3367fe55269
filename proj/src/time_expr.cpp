#include "qwalk/time_expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qwalk {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad(std::string_view text, const char* why) {
  throw std::invalid_argument("bad time '" + std::string(text) + "': " + why);
}

double number(std::string_view s, std::string_view whole) {
  s = trim(s);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) bad(whole, "expected a number");
  return v;
}

}  // namespace

double parse_time(std::string_view text, std::optional<double> delta) {
  const std::string_view s = trim(text);
  const auto pi_at = s.find("pi");
  if (pi_at == std::string_view::npos) {
    const double v = number(s, text);
    if (!std::isfinite(v) || v < 0) bad(text, "time must be finite and non-negative");
    return v;
  }

  std::string_view coef = trim(s.substr(0, pi_at));
  if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
  const double scale = coef.empty() ? 1.0 : number(coef, text);

  std::string_view rest = trim(s.substr(pi_at + 2));
  double denom = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') bad(text, "expected '/' after pi");
    rest = trim(rest.substr(1));
    if (rest == "Delta") {
      if (!delta) bad(text, "Delta is only defined for a top-level join of regular graphs");
      denom = *delta;
    } else if (rest.substr(0, 4) == "sqrt") {
      std::string_view arg = trim(rest.substr(4));
      if (!arg.empty() && arg.front() == '(' && arg.back() == ')') arg = arg.substr(1, arg.size() - 2);
      denom = std::sqrt(number(arg, text));
    } else {
      denom = number(rest, text);
    }
  }
  if (!(denom > 0)) bad(text, "denominator must be positive");
  const double t = scale * std::numbers::pi / denom;
  if (t < 0) bad(text, "time must be non-negative");
  return t;
}

}  // namespace qwalk
