#pragma once

// Closed-form amplitude reductions for composite graphs. Each one is expressed
// in terms of walks on the operands only and is checked against the dense
// walk on the explicitly built composite.

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "qwalk/circulant.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

/// Spectral data of the join G + H of an m-vertex kG-regular G with an
/// n-vertex kH-regular H.
struct JoinSpectralData {
  std::size_t m = 0, n = 0, kG = 0, kH = 0;
  double delta = 0.0;      // kG - kH
  double delta_hat = 0.0;  // kG + kH
  double Delta = 0.0;      // sqrt(delta^2 + 4mn)
  double alpha_plus = 0.0, alpha_minus = 0.0;
  double L_plus = 0.0, L_minus = 0.0;
  double lambda_plus = 0.0, lambda_minus = 0.0;
};

JoinSpectralData join_spectral_data(std::size_t m, std::size_t kG, std::size_t n, std::size_t kH);

/// <b| exp(-i t A_{G+H}) |a> for a, b in G, from the walk on G alone.
class JoinReduction {
 public:
  JoinReduction(const Graph& g, const Graph& h);

  Amplitude amplitude(VertexId a, VertexId b, double t) const;
  const JoinSpectralData& data() const { return data_; }

 private:
  QuantumWalk walk_;
  JoinSpectralData data_;
};

Amplitude join_amplitude(const Graph& g, const Graph& h, VertexId a, VertexId b, double t);

/// Amplitude between two vertices of the same copy of the m-fold self-join of a
/// regular graph g. Vertices are given by their index inside g.
class SelfJoinReduction {
 public:
  SelfJoinReduction(const Graph& g, std::size_t copies);

  Amplitude amplitude(VertexId a, VertexId b, double t) const;

 private:
  QuantumWalk walk_;
  std::size_t copies_;
  Eigen::VectorXd column_sums_;  // <1_n | v_k>
};

Amplitude self_join_amplitude(const Graph& g, std::size_t copies, VertexId a, VertexId b, double t);

/// Amplitude from (a, 0) to (b, s) in the circulant join of a circulant graph g
/// with connector C, via B = C^T C:
///   s = 0:  <b| cos(t sqrt B) exp(-i t A_G) |a>
///   s = 1:  -i <b| f_t(B) C^T exp(-i t A_G) |a>,  f_t(x) = sin(t sqrt x)/sqrt x, f_t(0) = t.
/// The returned Amplitude carries block-layout composite indices.
class CirculantJoinReduction {
 public:
  CirculantJoinReduction(const Graph& g, const CirculantSpec& connector);

  Amplitude amplitude(VertexId a, std::size_t target_copy, VertexId b, double t) const;

  /// cos(t sqrt B) for s = 0, f_t(B) C^T for s = 1.
  Eigen::MatrixXd transfer_matrix(std::size_t target_copy, double t) const;

 private:
  QuantumWalk walk_;
  Eigen::MatrixXd c_transposed_;
  Spectrum b_spectrum_;
};

Amplitude circulant_join_amplitude(const Graph& g, const CirculantSpec& connector, VertexId a,
                                   std::size_t target_copy, VertexId b, double t);

/// Sign s when the transfer matrix equals s * I within tol (a sufficient PST
/// condition, never used as a verdict on its own).
std::optional<int> circulant_join_condition(const Graph& g, const CirculantSpec& connector, std::size_t target_copy,
                                            double t, double tol = 1e-9);

/// x -> sin(t sqrt x) / sqrt x continued by f(0) = t; negative roundoff is clamped.
double sin_sqrt_over_sqrt(double x, double t);

/// Every eigenvalue of connector(n, Q) has magnitude within tol of a multiple of 2^u.
bool connector_eigenvalue_check(std::size_t n, const DivisorSet& q_set, double tol = 1e-9);

struct ProductFactor {
  Graph graph;
  VertexId a;
  VertexId b;
};

/// prod_j <b_j| exp(-i t A_j) |a_j>.
Amplitude cartesian_amplitude(const std::vector<ProductFactor>& parts, double t);

/// Index of (u_1, ..., u_m) in the nested Cartesian product, u_1 most significant.
std::size_t product_index(const std::vector<std::size_t>& orders, const std::vector<std::size_t>& coords);

/// Join spectrum assembled from the operands: spec(G) minus kG, spec(H) minus kH,
/// plus lambda_+ and lambda_-. Sorted ascending.
std::vector<double> predicted_join_eigenvalues(const Graph& g, const Graph& h);

}  // namespace qwalk
