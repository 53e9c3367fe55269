#pragma once

// Exact closed forms for eigenvalues built from cycle spectra, integer values
// and the quadratic join wings. Rationality is decided symbolically: Niven's
// theorem for the cosine terms and perfect-square tests for the radical.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qwalk {

/// 2 cos(2 pi num / den)
struct CosTerm {
  long long num = 0;
  long long den = 1;
};

/// (twice_constant + sqrt_sign * sqrt(radicand)) / 2 + sum of cosine terms.
struct ClosedForm {
  long long twice_constant = 0;
  std::vector<CosTerm> cos_terms;
  long long radicand = 0;
  int sqrt_sign = 0;

  static ClosedForm integer(long long v) { return ClosedForm{2 * v, {}, 0, 0}; }
  static ClosedForm cosine(long long num, long long den) { return ClosedForm{0, {CosTerm{num, den}}, 0, 0}; }

  double value() const;
  std::string describe() const;
};

enum class Rationality { Integer, Rational, Irrational, Unknown };

/// Exact value of 2cos(2 pi num/den) when Niven's theorem says it is rational
/// (it is then one of -2, -1, 0, 1, 2).
std::optional<long long> rational_cosine(const CosTerm& term);

Rationality classify(const ClosedForm& form);

/// The exact integer when classify(form) == Integer.
std::optional<long long> exact_integer(const ClosedForm& form);

/// Exact integer square root.
std::optional<long long> exact_sqrt(long long x);

std::vector<ClosedForm> cycle_closed_forms(std::size_t n);
std::vector<ClosedForm> path_closed_forms(std::size_t n);
std::vector<ClosedForm> complete_closed_forms(std::size_t n);
std::vector<ClosedForm> integer_closed_forms(const std::vector<long long>& values);

/// Pairwise sums (Cartesian product spectrum). Throws if both sides carry radicals.
std::vector<ClosedForm> cartesian_closed_forms(const std::vector<ClosedForm>& g, const std::vector<ClosedForm>& h);

/// Spectrum of G + H for regular operands: G's forms minus one certified kG, H's
/// forms minus one certified kH, plus (kG + kH +- sqrt((kG-kH)^2 + 4mn)) / 2.
/// nullopt if a degree cannot be located exactly.
std::optional<std::vector<ClosedForm>> join_closed_forms(const std::vector<ClosedForm>& g, long long kG,
                                                         const std::vector<ClosedForm>& h, long long kH);

}  // namespace qwalk
