#include "qwalk/graph.hpp"

#include <deque>
#include <stdexcept>

namespace qwalk {

BoolMatrix BoolMatrix::transposed() const {
  BoolMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, (*this)(r, c));
  return t;
}

Eigen::MatrixXd BoolMatrix::to_dense() const {
  Eigen::MatrixXd m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c) ? 1.0 : 0.0;
  return m;
}

Graph::Graph(BoolMatrix adjacency, std::vector<std::string> labels)
    : adj_(std::move(adjacency)), labels_(std::move(labels)) {
  if (adj_.rows() != adj_.cols()) throw std::invalid_argument("adjacency matrix must be square");
  if (adj_.rows() == 0) throw std::invalid_argument("graph must have at least one vertex");
  if (!labels_.empty() && labels_.size() != adj_.rows())
    throw std::invalid_argument("label count must match vertex count");
  const std::size_t n = adj_.rows();
  for (std::size_t u = 0; u < n; ++u) {
    if (adj_(u, u)) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    for (std::size_t v = u + 1; v < n; ++v)
      if (adj_(u, v) != adj_(v, u)) throw std::invalid_argument("adjacency is not symmetric");
  }
}

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  BoolMatrix m(n, n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    m.set(u, v, true);
    m.set(v, u, true);
  }
  return Graph(std::move(m));
}

std::size_t Graph::degree(std::size_t u) const {
  std::size_t d = 0;
  for (std::size_t v = 0; v < order(); ++v) d += adj_(u, v) ? 1 : 0;
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t e = 0;
  for (std::size_t u = 0; u < order(); ++u) e += degree(u);
  return e / 2;
}

std::vector<std::size_t> Graph::neighbors(std::size_t u) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < order(); ++v)
    if (adj_(u, v)) out.push_back(v);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < order(); ++u)
    for (std::size_t v = u + 1; v < order(); ++v)
      if (adj_(u, v)) out.emplace_back(u, v);
  return out;
}

std::string Graph::label(std::size_t u) const {
  return labels_.empty() ? std::to_string(u) : labels_.at(u);
}

Graph complete(std::size_t n) {
  if (n == 0) throw std::invalid_argument("complete graph needs n >= 1");
  BoolMatrix m(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) m.set(u, v, u != v);
  return Graph(std::move(m));
}

Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  BoolMatrix m(n, n);
  for (std::size_t u = 0; u < n; ++u) {
    m.set(u, (u + 1) % n, true);
    m.set((u + 1) % n, u, true);
  }
  return Graph(std::move(m));
}

Graph path(std::size_t n) {
  if (n < 2) throw std::invalid_argument("path needs n >= 2");
  BoolMatrix m(n, n);
  for (std::size_t u = 0; u + 1 < n; ++u) {
    m.set(u, u + 1, true);
    m.set(u + 1, u, true);
  }
  return Graph(std::move(m));
}

Graph empty_graph(std::size_t n) {
  if (n == 0) throw std::invalid_argument("empty graph needs n >= 1");
  return Graph(BoolMatrix(n, n));
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  BoolMatrix m(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) m.set(u, v, u != v && !g.adjacent(u, v));
  return Graph(std::move(m));
}

Graph permute(const Graph& g, const std::vector<std::size_t>& perm) {
  const std::size_t n = g.order();
  if (perm.size() != n) throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw std::invalid_argument("not a permutation");
    seen[p] = true;
  }
  BoolMatrix m(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) m.set(perm[u], perm[v], g.adjacent(u, v));
  return Graph(std::move(m));
}

std::optional<std::size_t> regularity(const Graph& g) {
  const std::size_t k = g.degree(0);
  for (std::size_t u = 1; u < g.order(); ++u)
    if (g.degree(u) != k) return std::nullopt;
  return k;
}

std::vector<std::optional<std::size_t>> distances_from(const Graph& g, VertexId a) {
  if (!g.contains(a)) throw std::out_of_range("vertex out of range");
  std::vector<std::optional<std::size_t>> dist(g.order());
  std::deque<std::size_t> queue{a.index};
  dist[a.index] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < g.order(); ++v) {
      if (g.adjacent(u, v) && !dist[v]) {
        dist[v] = *dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::optional<std::size_t> distance(const Graph& g, VertexId a, VertexId b) {
  if (!g.contains(b)) throw std::out_of_range("vertex out of range");
  return distances_from(g, a)[b.index];
}

bool is_connected(const Graph& g) {
  for (const auto& d : distances_from(g, VertexId{0}))
    if (!d) return false;
  return true;
}

std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t best = 0;
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (const auto& d : distances_from(g, VertexId{u})) {
      if (!d) return std::nullopt;
      best = std::max(best, *d);
    }
  }
  return best;
}

}  // namespace qwalk
