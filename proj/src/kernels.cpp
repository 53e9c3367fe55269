#include "qwalk/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace qwalk::kernels {

namespace {

void check_vertex(const Spectrum& spec, VertexId v) {
  if (v.index >= spec.size()) throw std::out_of_range("vertex out of range");
}

// One column of the fidelity table: psi = V (exp(-i t lambda) .* V[a, :]).
void fidelity_column(const Spectrum& spec, std::size_t a, double t, std::size_t column, std::size_t stride,
                     double* out) {
  const std::size_t n = spec.size();
  const auto& v = spec.vectors;
  std::vector<double> pr(n), pi(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double w = v(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(k));
    const double phase = t * spec.eigenvalues[k];
    pr[k] = std::cos(phase) * w;
    pi[k] = -std::sin(phase) * w;
  }
  for (std::size_t b = 0; b < n; ++b) {
    double re = 0.0, im = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double x = v(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(k));
      re += x * pr[k];
      im += x * pi[k];
    }
    out[b * stride + column] = std::hypot(re, im);
  }
}

std::complex<double> series_point(const Spectrum& spec, std::size_t a, std::size_t b, double t) {
  const auto& v = spec.vectors;
  double re = 0.0, im = 0.0;
  for (std::size_t k = 0; k < spec.size(); ++k) {
    const auto kk = static_cast<Eigen::Index>(k);
    const double w = v(static_cast<Eigen::Index>(a), kk) * v(static_cast<Eigen::Index>(b), kk);
    const double phase = t * spec.eigenvalues[k];
    re += std::cos(phase) * w;
    im -= std::sin(phase) * w;
  }
  return {re, im};
}

FidelityTable make_table(const Spectrum& spec, std::size_t times) {
  return FidelityTable{spec.size(), times, std::vector<double>(spec.size() * times)};
}

}  // namespace

FidelityTable fidelity_scan_serial(const Spectrum& spec, VertexId a, std::span<const double> times) {
  check_vertex(spec, a);
  auto table = make_table(spec, times.size());
  for (std::size_t j = 0; j < times.size(); ++j) fidelity_column(spec, a.index, times[j], j, times.size(), table.data.data());
  return table;
}

FidelityTable fidelity_scan_omp(const Spectrum& spec, VertexId a, std::span<const double> times) {
  check_vertex(spec, a);
  auto table = make_table(spec, times.size());
  const auto count = static_cast<long long>(times.size());
  double* out = table.data.data();
#pragma omp parallel for schedule(static)
  for (long long j = 0; j < count; ++j)
    fidelity_column(spec, a.index, times[static_cast<std::size_t>(j)], static_cast<std::size_t>(j), times.size(), out);
  return table;
}

std::vector<std::complex<double>> amplitude_series_serial(const Spectrum& spec, VertexId a, VertexId b,
                                                          std::span<const double> times) {
  check_vertex(spec, a);
  check_vertex(spec, b);
  std::vector<std::complex<double>> out(times.size());
  for (std::size_t j = 0; j < times.size(); ++j) out[j] = series_point(spec, a.index, b.index, times[j]);
  return out;
}

std::vector<std::complex<double>> amplitude_series_omp(const Spectrum& spec, VertexId a, VertexId b,
                                                       std::span<const double> times) {
  check_vertex(spec, a);
  check_vertex(spec, b);
  std::vector<std::complex<double>> out(times.size());
  const auto count = static_cast<long long>(times.size());
#pragma omp parallel for schedule(static)
  for (long long j = 0; j < count; ++j) {
    const auto i = static_cast<std::size_t>(j);
    out[i] = series_point(spec, a.index, b.index, times[i]);
  }
  return out;
}

std::vector<double> uniform_grid(double t_max, std::size_t count) {
  if (count == 0 || !(t_max > 0.0)) throw std::invalid_argument("grid needs a positive span and count");
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = t_max * static_cast<double>(i + 1) / static_cast<double>(count);
  return out;
}

}  // namespace qwalk::kernels
