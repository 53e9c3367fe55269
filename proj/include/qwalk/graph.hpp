#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qwalk {

/// Position of a vertex inside its owning graph (0-based).
struct VertexId {
  std::size_t index = 0;
  auto operator<=>(const VertexId&) const = default;
};

/// Dense row-major 0/1 matrix. Used for adjacency tables and connector matrices.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  BoolMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c] != 0; }
  void set(std::size_t r, std::size_t c, bool v) { data_[r * cols_ + c] = v ? 1 : 0; }

  BoolMatrix transposed() const;
  Eigen::MatrixXd to_dense() const;

  bool operator==(const BoolMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> data_;
};

/// Finite simple undirected graph with dense adjacency.
///
/// Values are immutable once built; every constructor validates symmetry and
/// the zero diagonal and throws std::invalid_argument otherwise.
class Graph {
 public:
  Graph() = default;
  explicit Graph(BoolMatrix adjacency, std::vector<std::string> labels = {});

  static Graph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t order() const { return adj_.rows(); }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_(u, v); }
  bool adjacent(VertexId u, VertexId v) const { return adj_(u.index, v.index); }
  std::size_t degree(std::size_t u) const;
  std::size_t edge_count() const;
  std::vector<std::size_t> neighbors(std::size_t u) const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  const BoolMatrix& adjacency() const { return adj_; }
  Eigen::MatrixXd adjacency_matrix() const { return adj_.to_dense(); }

  bool has_labels() const { return !labels_.empty(); }
  std::string label(std::size_t u) const;

  bool contains(VertexId v) const { return v.index < order(); }

  /// Equality compares structure only; labels are presentation.
  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  BoolMatrix adj_;
  std::vector<std::string> labels_;
};

Graph complete(std::size_t n);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph empty_graph(std::size_t n);
Graph complement(const Graph& g);

/// Relabels vertices: vertex v of g becomes vertex perm[v] of the result.
Graph permute(const Graph& g, const std::vector<std::size_t>& perm);

/// Common degree when g is regular.
std::optional<std::size_t> regularity(const Graph& g);

/// Breadth-first hop count; nullopt when b is unreachable from a.
std::optional<std::size_t> distance(const Graph& g, VertexId a, VertexId b);
std::vector<std::optional<std::size_t>> distances_from(const Graph& g, VertexId a);

bool is_connected(const Graph& g);

/// Largest finite distance; nullopt for disconnected graphs.
std::optional<std::size_t> diameter(const Graph& g);

// Edge-list text format: "n <count>" then one "u v" pair per line, '#' comments.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace qwalk
