#include "qwalk/walk.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace qwalk {

Spectrum decompose(const Eigen::MatrixXd& symmetric) {
  if (symmetric.rows() != symmetric.cols()) throw std::invalid_argument("decompose needs a square matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(symmetric, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw std::runtime_error("symmetric eigensolver did not converge");
  Spectrum out;
  out.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
  out.vectors = solver.eigenvectors();
  return out;
}

Spectrum decompose(const Graph& g) { return decompose(g.adjacency_matrix()); }

double max_residual(const Eigen::MatrixXd& a, const Spectrum& spec) {
  double worst = 0.0;
  for (std::size_t k = 0; k < spec.size(); ++k) {
    const Eigen::VectorXd v = spec.vectors.col(static_cast<Eigen::Index>(k));
    worst = std::max(worst, (a * v - spec.eigenvalues[k] * v).norm());
  }
  return worst;
}

double orthonormality_defect(const Spectrum& spec) {
  const Eigen::MatrixXd gram = spec.vectors.transpose() * spec.vectors;
  return (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

QuantumWalk::QuantumWalk(const Graph& g) : spectrum_(decompose(g)) {}

QuantumWalk::QuantumWalk(Spectrum spectrum) : spectrum_(std::move(spectrum)) {}

void QuantumWalk::check(VertexId v) const {
  if (v.index >= order()) throw std::out_of_range("vertex " + std::to_string(v.index) + " out of range");
}

Amplitude QuantumWalk::amplitude(VertexId a, VertexId b, double t) const {
  check(a);
  check(b);
  const auto& v = spectrum_.vectors;
  double re = 0.0, im = 0.0;
  for (std::size_t k = 0; k < spectrum_.size(); ++k) {
    const auto kk = static_cast<Eigen::Index>(k);
    const double w = v(static_cast<Eigen::Index>(a.index), kk) * v(static_cast<Eigen::Index>(b.index), kk);
    const double phase = t * spectrum_.eigenvalues[k];
    re += std::cos(phase) * w;
    im -= std::sin(phase) * w;
  }
  return Amplitude{{re, im}, t, a, b};
}

Eigen::VectorXcd QuantumWalk::evolve(VertexId a, double t) const {
  check(a);
  const auto& v = spectrum_.vectors;
  Eigen::VectorXcd coeff(static_cast<Eigen::Index>(order()));
  for (std::size_t k = 0; k < order(); ++k) {
    const double phase = t * spectrum_.eigenvalues[k];
    const auto kk = static_cast<Eigen::Index>(k);
    coeff(kk) = std::complex<double>(std::cos(phase), -std::sin(phase)) * v(static_cast<Eigen::Index>(a.index), kk);
  }
  return v.cast<std::complex<double>>() * coeff;
}

Amplitude amplitude(const Graph& g, VertexId a, VertexId b, double t) { return QuantumWalk(g).amplitude(a, b, t); }

Eigen::VectorXcd amplitude_row(const Graph& g, VertexId a, double t) { return QuantumWalk(g).evolve(a, t); }

Eigen::MatrixXd matrix_function(const Spectrum& spec, const std::function<double(double)>& f) {
  Eigen::VectorXd fx(static_cast<Eigen::Index>(spec.size()));
  for (std::size_t k = 0; k < spec.size(); ++k) fx(static_cast<Eigen::Index>(k)) = f(spec.eigenvalues[k]);
  return spec.vectors * fx.asDiagonal() * spec.vectors.transpose();
}

std::complex<double> fourier_amplitude(const CirculantSpec& spec, VertexId a, VertexId b, double t) {
  const std::size_t n = spec.order();
  if (a.index >= n || b.index >= n) throw std::out_of_range("vertex out of range");
  const auto lambda = circulant_eigenvalues(spec);
  // A F_j = lambda_{-j} F_j with <x|F_j> = w^{jx}/sqrt(n).
  const std::size_t diff = (b.index + n - a.index) % n;
  std::complex<double> sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::complex<double> mu = lambda[(n - j) % n];
    const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * diff) % n) / static_cast<double>(n);
    sum += std::exp(std::complex<double>(0.0, -t) * mu) * std::polar(1.0, angle);
  }
  return sum / static_cast<double>(n);
}

}  // namespace qwalk
