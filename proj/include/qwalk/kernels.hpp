#pragma once

// Grid kernels over a time axis. Each comes as a serial reference and an
// OpenMP variant that parallelises over time points; both evaluate each grid
// point with the same arithmetic, so their outputs are bitwise identical.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qwalk/walk.hpp"

namespace qwalk::kernels {

/// |<b| exp(-i t_j A) |a>| for every vertex b and every time t_j.
struct FidelityTable {
  std::size_t vertices = 0;
  std::size_t times = 0;
  std::vector<double> data;  // row-major, one row per target vertex

  double at(std::size_t b, std::size_t j) const { return data[b * times + j]; }
};

FidelityTable fidelity_scan_serial(const Spectrum& spec, VertexId a, std::span<const double> times);
FidelityTable fidelity_scan_omp(const Spectrum& spec, VertexId a, std::span<const double> times);

std::vector<std::complex<double>> amplitude_series_serial(const Spectrum& spec, VertexId a, VertexId b,
                                                          std::span<const double> times);
std::vector<std::complex<double>> amplitude_series_omp(const Spectrum& spec, VertexId a, VertexId b,
                                                       std::span<const double> times);

inline FidelityTable fidelity_scan(const Spectrum& spec, VertexId a, std::span<const double> times) {
  return fidelity_scan_omp(spec, a, times);
}

inline std::vector<std::complex<double>> amplitude_series(const Spectrum& spec, VertexId a, VertexId b,
                                                          std::span<const double> times) {
  return amplitude_series_omp(spec, a, b, times);
}

/// t_i = t_max * i / count for i = 1..count, i.e. a uniform grid on (0, t_max].
std::vector<double> uniform_grid(double t_max, std::size_t count);

}  // namespace qwalk::kernels
