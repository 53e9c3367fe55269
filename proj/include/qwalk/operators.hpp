#pragma once

#include <cstddef>
#include <vector>

#include "qwalk/circulant.hpp"
#include "qwalk/graph.hpp"

namespace qwalk {

/// Vertex order of a two-copy construction. Vertex u of copy s sits at
/// s*n + u under Block and at 2u + s under Interleaved.
enum class JoinLayout { Block, Interleaved };

std::size_t layout_index(JoinLayout layout, std::size_t n, std::size_t u, std::size_t copy);

/// perm[i] is the index under `to` of the vertex at index i under `from`.
std::vector<std::size_t> layout_permutation(std::size_t n, JoinLayout from, JoinLayout to);

/// Block adjacency [[A_G, J], [J, A_H]]; g occupies 0..|g|-1.
Graph join(const Graph& g, const Graph& h);

/// Kronecker sum; vertex (u, v) at u*|h| + v.
Graph cartesian(const Graph& g, const Graph& h);

/// m-fold join of g with itself; copy c occupies c*n .. c*n+n-1.
Graph self_join(const Graph& g, std::size_t m);

/// Two copies of g cross-wired by the connector: [[A_G, C], [C^T, A_G]] in
/// block order. With a palindrome connector and circulant g the interleaved
/// output is itself circulant; that is checked on construction.
Graph circulant_join(const Graph& g, const CirculantSpec& connector, JoinLayout layout);

/// Connector row c_j(Q) = sum_{q in Q} [2j+1 = 0 mod q and no r in N(q) divides 2j+1],
/// N(q) = {r | m : r/q an odd prime}, for n = 2^u m with u >= 3 and odd m >= 3.
/// Q must be a nonempty set of divisors of m (m itself allowed).
CirculantSpec connector(std::size_t n, const DivisorSet& q_set);

/// True when Q is every divisor of the odd part, so the connector degenerates to J.
bool connector_uses_all_divisors(std::size_t n, const DivisorSet& q_set);

/// True when spec is one of the identity, all-ones or all-zeros connectors.
bool is_trivial_connector(const CirculantSpec& spec);

}  // namespace qwalk
