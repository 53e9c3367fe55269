#include "qwalk/circulant.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qwalk {

CirculantSpec::CirculantSpec(std::vector<std::uint8_t> first_row) : row(std::move(first_row)) {
  if (row.empty()) throw std::invalid_argument("circulant order must be positive");
  for (auto& x : row) x = x ? 1 : 0;
}

std::size_t CirculantSpec::weight() const { return std::accumulate(row.begin(), row.end(), std::size_t{0}); }

bool CirculantSpec::is_symmetric() const {
  const std::size_t n = order();
  for (std::size_t j = 1; j < n; ++j)
    if (row[j] != row[n - j]) return false;
  return true;
}

CirculantSpec circulant_from_set(std::size_t n, const std::vector<long long>& connection_set) {
  if (n == 0) throw std::invalid_argument("circulant order must be positive");
  std::vector<std::uint8_t> row(n, 0);
  const auto sn = static_cast<long long>(n);
  for (long long s : connection_set) row[static_cast<std::size_t>(((s % sn) + sn) % sn)] = 1;
  return CirculantSpec(std::move(row));
}

CirculantSpec identity_spec(std::size_t n) { return circulant_permutation(n, 0); }

CirculantSpec all_ones_spec(std::size_t n) { return CirculantSpec(std::vector<std::uint8_t>(n, 1)); }

CirculantSpec zero_spec(std::size_t n) { return CirculantSpec(std::vector<std::uint8_t>(n, 0)); }

CirculantSpec circulant_permutation(std::size_t n, std::size_t shift) {
  if (shift >= n) throw std::invalid_argument("shift must lie in [0, n)");
  std::vector<std::uint8_t> row(n, 0);
  row[shift] = 1;
  return CirculantSpec(std::move(row));
}

BoolMatrix to_matrix(const CirculantSpec& spec) {
  const std::size_t n = spec.order();
  BoolMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m.set(j, k, spec[(k + n - j) % n]);
  return m;
}

bool is_palindrome(const CirculantSpec& spec) {
  const std::size_t n = spec.order();
  for (std::size_t j = 0; j < n; ++j)
    if (spec.row[j] != spec.row[n - 1 - j]) return false;
  return true;
}

Graph circulant_graph(const CirculantSpec& spec) {
  if (!spec.is_graph()) throw std::invalid_argument("circulant row is not a simple undirected graph");
  return Graph(to_matrix(spec));
}

std::optional<CirculantSpec> circulant_row(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint8_t> row(n);
  for (std::size_t k = 0; k < n; ++k) row[k] = g.adjacent(0, k) ? 1 : 0;
  CirculantSpec spec(std::move(row));
  if (to_matrix(spec) != g.adjacency()) return std::nullopt;
  return spec;
}

DivisorSet proper_divisors(std::size_t n) {
  DivisorSet out;
  for (std::size_t d = 1; d < n; ++d)
    if (n % d == 0) out.insert(d);
  return out;
}

DivisorSet all_divisors(std::size_t m) {
  DivisorSet out = proper_divisors(m);
  if (m >= 1) out.insert(m);
  return out;
}

std::vector<std::size_t> gcd_class(std::size_t n, std::size_t d) {
  if (d == 0 || d >= n || n % d != 0)
    throw std::invalid_argument("gcd class needs a divisor d of n with 1 <= d < n (n=" + std::to_string(n) +
                                ", d=" + std::to_string(d) + ")");
  std::vector<std::size_t> out;
  for (std::size_t k = d; k < n; k += d)
    if (std::gcd(n, k) == d) out.push_back(k);
  return out;
}

CirculantSpec icg_spec(std::size_t n, const DivisorSet& divisors) {
  if (n < 2) throw std::invalid_argument("integral circulant needs n >= 2");
  std::vector<std::uint8_t> row(n, 0);
  for (std::size_t d : divisors)
    for (std::size_t k : gcd_class(n, d)) row[k] = 1;
  return CirculantSpec(std::move(row));
}

Graph icg(std::size_t n, const DivisorSet& divisors) { return circulant_graph(icg_spec(n, divisors)); }

std::optional<DivisorSet> integrality_decomposition(const CirculantSpec& spec) {
  if (!spec.is_graph()) throw std::invalid_argument("row does not describe a circulant graph");
  const std::size_t n = spec.order();
  DivisorSet out;
  // Each gcd class must be entirely in or entirely out of the connection set.
  for (std::size_t d : proper_divisors(n)) {
    const auto cls = gcd_class(n, d);
    std::size_t hits = 0;
    for (std::size_t k : cls) hits += spec.row[k];
    if (hits == cls.size()) {
      out.insert(d);
    } else if (hits != 0) {
      return std::nullopt;
    }
  }
  return out;
}

std::optional<DivisorSet> integrality_decomposition(const Graph& g) {
  auto spec = circulant_row(g);
  if (!spec) throw std::invalid_argument("graph is not circulant");
  return integrality_decomposition(*spec);
}

std::vector<std::complex<double>> circulant_eigenvalues(const CirculantSpec& spec) {
  const std::size_t n = spec.order();
  std::vector<std::complex<double>> out(n);
  const bool symmetric = spec.is_symmetric();
  for (std::size_t j = 0; j < n; ++j) {
    double re = 0.0, im = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      if (!spec[(n - k) % n]) continue;
      // Reduce jk mod n before scaling so large indices keep full precision.
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / static_cast<double>(n);
      re += std::cos(angle);
      if (!symmetric) im += std::sin(angle);
    }
    out[j] = {re, im};
  }
  return out;
}

TwoAdicSplit split_two_adic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cannot split zero");
  TwoAdicSplit s{0, n};
  while (s.m % 2 == 0) {
    s.m /= 2;
    ++s.u;
  }
  return s;
}

}  // namespace qwalk
