#include "qwalk/operators.hpp"

#include <stdexcept>
#include <string>

namespace qwalk {

namespace {

bool is_odd_prime(std::size_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::size_t f = 3; f * f <= p; f += 2)
    if (p % f == 0) return false;
  return true;
}

}  // namespace

std::size_t layout_index(JoinLayout layout, std::size_t n, std::size_t u, std::size_t copy) {
  return layout == JoinLayout::Block ? copy * n + u : 2 * u + copy;
}

std::vector<std::size_t> layout_permutation(std::size_t n, JoinLayout from, JoinLayout to) {
  std::vector<std::size_t> perm(2 * n);
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t u = 0; u < n; ++u) perm[layout_index(from, n, u, s)] = layout_index(to, n, u, s);
  return perm;
}

Graph join(const Graph& g, const Graph& h) {
  const std::size_t m = g.order(), n = h.order();
  BoolMatrix a(m + n, m + n);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) a.set(u, v, g.adjacent(u, v));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) a.set(m + u, m + v, h.adjacent(u, v));
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      a.set(u, m + v, true);
      a.set(m + v, u, true);
    }
  return Graph(std::move(a));
}

Graph cartesian(const Graph& g, const Graph& h) {
  const std::size_t m = g.order(), n = h.order();
  BoolMatrix a(m * n, m * n);
  for (std::size_t u1 = 0; u1 < m; ++u1)
    for (std::size_t v1 = 0; v1 < n; ++v1)
      for (std::size_t u2 = 0; u2 < m; ++u2)
        for (std::size_t v2 = 0; v2 < n; ++v2) {
          const bool edge = (u1 == u2 && h.adjacent(v1, v2)) || (v1 == v2 && g.adjacent(u1, u2));
          a.set(u1 * n + v1, u2 * n + v2, edge);
        }
  return Graph(std::move(a));
}

Graph self_join(const Graph& g, std::size_t m) {
  if (m == 0) throw std::invalid_argument("self-join needs at least one copy");
  const std::size_t n = g.order();
  BoolMatrix a(m * n, m * n);
  for (std::size_t c1 = 0; c1 < m; ++c1)
    for (std::size_t c2 = 0; c2 < m; ++c2)
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) a.set(c1 * n + u, c2 * n + v, c1 == c2 ? g.adjacent(u, v) : true);
  return Graph(std::move(a));
}

Graph circulant_join(const Graph& g, const CirculantSpec& connector, JoinLayout layout) {
  const std::size_t n = g.order();
  if (connector.order() != n)
    throw std::invalid_argument("connector order " + std::to_string(connector.order()) +
                                " does not match graph order " + std::to_string(n));
  const BoolMatrix c = to_matrix(connector);
  BoolMatrix a(2 * n, 2 * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      a.set(layout_index(layout, n, u, 0), layout_index(layout, n, v, 0), g.adjacent(u, v));
      a.set(layout_index(layout, n, u, 1), layout_index(layout, n, v, 1), g.adjacent(u, v));
      a.set(layout_index(layout, n, u, 0), layout_index(layout, n, v, 1), c(u, v));
      a.set(layout_index(layout, n, v, 1), layout_index(layout, n, u, 0), c(u, v));
    }
  Graph out(std::move(a));
  if (layout == JoinLayout::Interleaved && is_palindrome(connector) && circulant_row(g) && !circulant_row(out))
    throw std::logic_error("palindrome circulant join produced a non-circulant graph");
  return out;
}

CirculantSpec connector(std::size_t n, const DivisorSet& q_set) {
  const auto [u, m] = split_two_adic(n);
  if (u < 3 || m < 3)
    throw std::invalid_argument("connector needs n = 2^u m with u >= 3 and odd m >= 3 (got n=" + std::to_string(n) +
                                ")");
  if (q_set.empty()) throw std::invalid_argument("connector needs a nonempty divisor set");
  const DivisorSet divisors = all_divisors(m);
  for (std::size_t q : q_set)
    if (!divisors.contains(q))
      throw std::invalid_argument(std::to_string(q) + " does not divide the odd part " + std::to_string(m));

  std::vector<std::uint8_t> row(n, 0);
  for (std::size_t q : q_set) {
    std::vector<std::size_t> excluded;
    for (std::size_t r : divisors)
      if (r % q == 0 && is_odd_prime(r / q)) excluded.push_back(r);
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t odd = 2 * j + 1;
      if (odd % q != 0) continue;
      bool hit = true;
      for (std::size_t r : excluded)
        if (odd % r == 0) hit = false;
      if (!hit) continue;
      if (row[j]) throw std::logic_error("connector supports overlap at j=" + std::to_string(j));
      row[j] = 1;
    }
  }
  CirculantSpec spec(std::move(row));
  if (!is_palindrome(spec)) throw std::logic_error("connector row is not a palindrome");
  return spec;
}

bool connector_uses_all_divisors(std::size_t n, const DivisorSet& q_set) {
  return q_set == all_divisors(split_two_adic(n).m);
}

bool is_trivial_connector(const CirculantSpec& spec) {
  const std::size_t n = spec.order();
  return spec == identity_spec(n) || spec == all_ones_spec(n) || spec == zero_spec(n);
}

}  // namespace qwalk
