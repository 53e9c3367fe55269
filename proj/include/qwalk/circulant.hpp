#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "qwalk/graph.hpp"

namespace qwalk {

/// Set of positive divisors of some modulus.
using DivisorSet = std::set<std::size_t>;

/// A circulant 0/1 matrix given by its first row; entry [j,k] = row[(k - j) mod n].
///
/// As a graph the row must satisfy row[0] = 0 and row[j] = row[n - j]. As a
/// connector between two copies of a graph there is no symmetry requirement.
struct CirculantSpec {
  std::vector<std::uint8_t> row;

  CirculantSpec() = default;
  explicit CirculantSpec(std::vector<std::uint8_t> first_row);

  std::size_t order() const { return row.size(); }
  bool operator[](std::size_t j) const { return row[j] != 0; }
  std::size_t weight() const;
  bool is_symmetric() const;
  bool is_graph() const { return row[0] == 0 && is_symmetric(); }

  bool operator==(const CirculantSpec&) const = default;
};

/// Connection-set constructor: row[s mod n] = 1 for every s in the set.
CirculantSpec circulant_from_set(std::size_t n, const std::vector<long long>& connection_set);

CirculantSpec identity_spec(std::size_t n);
CirculantSpec all_ones_spec(std::size_t n);
CirculantSpec zero_spec(std::size_t n);
CirculantSpec circulant_permutation(std::size_t n, std::size_t shift);

BoolMatrix to_matrix(const CirculantSpec& spec);
bool is_palindrome(const CirculantSpec& spec);

Graph circulant_graph(const CirculantSpec& spec);

/// First row of g when its adjacency is circulant.
std::optional<CirculantSpec> circulant_row(const Graph& g);

/// {d : d | n, 1 <= d < n}.
DivisorSet proper_divisors(std::size_t n);
/// {d : d | m, 1 <= d <= m}.
DivisorSet all_divisors(std::size_t m);

/// {k : gcd(n, k) = d, 1 <= k < n}. Throws unless d | n and 1 <= d < n.
std::vector<std::size_t> gcd_class(std::size_t n, std::size_t d);

CirculantSpec icg_spec(std::size_t n, const DivisorSet& divisors);
Graph icg(std::size_t n, const DivisorSet& divisors);

/// Divisor set D with S = union of gcd classes G_n(d), d in D, if S has that
/// form. Decided structurally. Throws std::invalid_argument on a non-circulant graph.
std::optional<DivisorSet> integrality_decomposition(const Graph& g);
std::optional<DivisorSet> integrality_decomposition(const CirculantSpec& spec);

/// lambda_j = sum_k a_{n-k} w^{jk}, w = exp(2 pi i / n), j = 0..n-1.
/// Symmetric rows are evaluated as real cosine sums.
std::vector<std::complex<double>> circulant_eigenvalues(const CirculantSpec& spec);

/// Odd part and 2-adic exponent: n = 2^u * m with m odd.
struct TwoAdicSplit {
  std::size_t u = 0;
  std::size_t m = 1;
};
TwoAdicSplit split_two_adic(std::size_t n);

}  // namespace qwalk
