#include "qwalk/closed_form.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qwalk {

double ClosedForm::value() const {
  double v = static_cast<double>(twice_constant) / 2.0;
  for (const auto& c : cos_terms)
    v += 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(c.num) / static_cast<double>(c.den));
  if (sqrt_sign != 0) v += sqrt_sign * std::sqrt(static_cast<double>(radicand)) / 2.0;
  return v;
}

std::string ClosedForm::describe() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&](bool negative) {
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    first = false;
  };
  if (twice_constant != 0 || (cos_terms.empty() && sqrt_sign == 0)) {
    sep(twice_constant < 0);
    const long long a = std::llabs(twice_constant);
    if (a % 2 == 0) os << a / 2;
    else os << a << "/2";
  }
  for (const auto& c : cos_terms) {
    sep(false);
    os << "2cos(2pi*" << c.num << "/" << c.den << ")";
  }
  if (sqrt_sign != 0) {
    sep(sqrt_sign < 0);
    os << "sqrt(" << radicand << ")/2";
  }
  return os.str();
}

std::optional<long long> rational_cosine(const CosTerm& term) {
  if (term.den <= 0) throw std::invalid_argument("cosine term needs a positive denominator");
  const long long num = ((term.num % term.den) + term.den) % term.den;
  const long long reduced = term.den / std::gcd(num, term.den);
  switch (reduced) {
    case 1: return 2;
    case 2: return -2;
    case 3: return -1;
    case 4: return 0;
    case 6: return 1;
    default: return std::nullopt;
  }
}

std::optional<long long> exact_sqrt(long long x) {
  if (x < 0) return std::nullopt;
  using Wide = __int128;
  auto r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(x))));
  while (r > 0 && Wide{r} * r > x) --r;
  while (Wide{r + 1} * (r + 1) <= x) ++r;
  if (Wide{r} * r == x) return r;
  return std::nullopt;
}

namespace {

struct Parts {
  long long twice_rational = 0;
  int irrational = 0;
};

Parts split(const ClosedForm& form) {
  Parts p{form.twice_constant, 0};
  for (const auto& c : form.cos_terms) {
    if (auto v = rational_cosine(c)) p.twice_rational += 2 * *v;
    else ++p.irrational;
  }
  if (form.sqrt_sign != 0) {
    if (auto r = exact_sqrt(form.radicand)) p.twice_rational += form.sqrt_sign * *r;
    else ++p.irrational;
  }
  return p;
}

}  // namespace

Rationality classify(const ClosedForm& form) {
  const Parts p = split(form);
  if (p.irrational == 0) return p.twice_rational % 2 == 0 ? Rationality::Integer : Rationality::Rational;
  // A rational plus exactly one irrational is irrational; more terms may cancel.
  if (p.irrational == 1) return Rationality::Irrational;
  return Rationality::Unknown;
}

std::optional<long long> exact_integer(const ClosedForm& form) {
  const Parts p = split(form);
  if (p.irrational != 0 || p.twice_rational % 2 != 0) return std::nullopt;
  return p.twice_rational / 2;
}

std::vector<ClosedForm> cycle_closed_forms(std::size_t n) {
  std::vector<ClosedForm> out;
  for (std::size_t j = 0; j < n; ++j)
    out.push_back(ClosedForm::cosine(static_cast<long long>(j), static_cast<long long>(n)));
  return out;
}

std::vector<ClosedForm> path_closed_forms(std::size_t n) {
  // 2cos(pi j/(n+1)), j = 1..n
  std::vector<ClosedForm> out;
  for (std::size_t j = 1; j <= n; ++j)
    out.push_back(ClosedForm::cosine(static_cast<long long>(j), 2 * static_cast<long long>(n + 1)));
  return out;
}

std::vector<ClosedForm> complete_closed_forms(std::size_t n) {
  std::vector<ClosedForm> out{ClosedForm::integer(static_cast<long long>(n) - 1)};
  for (std::size_t j = 1; j < n; ++j) out.push_back(ClosedForm::integer(-1));
  return out;
}

std::vector<ClosedForm> integer_closed_forms(const std::vector<long long>& values) {
  std::vector<ClosedForm> out;
  for (long long v : values) out.push_back(ClosedForm::integer(v));
  return out;
}

std::vector<ClosedForm> cartesian_closed_forms(const std::vector<ClosedForm>& g, const std::vector<ClosedForm>& h) {
  std::vector<ClosedForm> out;
  out.reserve(g.size() * h.size());
  for (const auto& x : g)
    for (const auto& y : h) {
      if (x.sqrt_sign != 0 && y.sqrt_sign != 0)
        throw std::invalid_argument("closed form cannot carry two radicals");
      ClosedForm s = x;
      s.twice_constant += y.twice_constant;
      s.cos_terms.insert(s.cos_terms.end(), y.cos_terms.begin(), y.cos_terms.end());
      if (y.sqrt_sign != 0) {
        s.radicand = y.radicand;
        s.sqrt_sign = y.sqrt_sign;
      }
      out.push_back(std::move(s));
    }
  return out;
}

std::optional<std::vector<ClosedForm>> join_closed_forms(const std::vector<ClosedForm>& g, long long kG,
                                                         const std::vector<ClosedForm>& h, long long kH) {
  auto drop = [](std::vector<ClosedForm> forms, long long degree) -> std::optional<std::vector<ClosedForm>> {
    for (auto it = forms.begin(); it != forms.end(); ++it) {
      if (exact_integer(*it) == degree) {
        forms.erase(it);
        return forms;
      }
    }
    return std::nullopt;
  };
  auto rest_g = drop(g, kG);
  auto rest_h = drop(h, kH);
  if (!rest_g || !rest_h) return std::nullopt;
  const long long m = static_cast<long long>(g.size()), n = static_cast<long long>(h.size());
  const long long delta = kG - kH;
  std::vector<ClosedForm> out = std::move(*rest_g);
  out.insert(out.end(), rest_h->begin(), rest_h->end());
  const long long radicand = delta * delta + 4 * m * n;
  out.push_back(ClosedForm{kG + kH, {}, radicand, +1});
  out.push_back(ClosedForm{kG + kH, {}, radicand, -1});
  return out;
}

}  // namespace qwalk
