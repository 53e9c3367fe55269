#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/circulant.hpp"
#include "qwalk/graph.hpp"

namespace qwalk {

/// Eigenvalues in ascending order with orthonormal eigenvectors as columns.
struct Spectrum {
  std::vector<double> eigenvalues;
  Eigen::MatrixXd vectors;

  std::size_t size() const { return eigenvalues.size(); }
};

/// Dense symmetric eigendecomposition. Throws std::runtime_error if the solver
/// does not converge.
Spectrum decompose(const Eigen::MatrixXd& symmetric);
Spectrum decompose(const Graph& g);

/// max_k ||A v_k - lambda_k v_k||_2
double max_residual(const Eigen::MatrixXd& a, const Spectrum& spec);
/// max_{j,k} |<v_j, v_k> - [j == k]|
double orthonormality_defect(const Spectrum& spec);

/// <b| exp(-i t A) |a> together with the data that produced it.
struct Amplitude {
  std::complex<double> value;
  double t = 0.0;
  VertexId a;
  VertexId b;

  double magnitude() const { return std::abs(value); }
};

/// Continuous-time quantum walk under the adjacency matrix, evaluated through a
/// cached spectral decomposition.
class QuantumWalk {
 public:
  explicit QuantumWalk(const Graph& g);
  explicit QuantumWalk(Spectrum spectrum);

  std::size_t order() const { return spectrum_.size(); }
  const Spectrum& spectrum() const { return spectrum_; }

  Amplitude amplitude(VertexId a, VertexId b, double t) const;
  /// Full state exp(-i t A) |a>.
  Eigen::VectorXcd evolve(VertexId a, double t) const;

 private:
  void check(VertexId v) const;

  Spectrum spectrum_;
};

Amplitude amplitude(const Graph& g, VertexId a, VertexId b, double t);
Eigen::VectorXcd amplitude_row(const Graph& g, VertexId a, double t);

/// sum_k f(lambda_k) v_k v_k^T
Eigen::MatrixXd matrix_function(const Spectrum& spec, const std::function<double(double)>& f);

/// Amplitude of a circulant graph from its Fourier eigenvalues and the Fourier
/// basis, with no dense eigensolver involved.
std::complex<double> fourier_amplitude(const CirculantSpec& spec, VertexId a, VertexId b, double t);

}  // namespace qwalk
