#include "qwalk/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qwalk/operators.hpp"

namespace qwalk {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

std::size_t require_regular(const Graph& g, const char* what) {
  auto k = regularity(g);
  if (!k) throw std::invalid_argument(std::string(what) + " must be a regular graph");
  return *k;
}

}  // namespace

JoinSpectralData join_spectral_data(std::size_t m, std::size_t kG, std::size_t n, std::size_t kH) {
  if (m == 0 || n == 0) throw std::invalid_argument("join operands need at least one vertex");
  if (kG >= m || kH >= n) throw std::invalid_argument("regular degree must be below the vertex count");
  JoinSpectralData d;
  d.m = m;
  d.n = n;
  d.kG = kG;
  d.kH = kH;
  const double md = static_cast<double>(m), nd = static_cast<double>(n);
  d.delta = static_cast<double>(kG) - static_cast<double>(kH);
  d.delta_hat = static_cast<double>(kG) + static_cast<double>(kH);
  d.Delta = std::sqrt(d.delta * d.delta + 4.0 * md * nd);
  d.alpha_plus = (d.delta + d.Delta) / (2.0 * md);
  d.alpha_minus = (d.delta - d.Delta) / (2.0 * md);
  d.L_plus = md * d.alpha_plus * d.alpha_plus + nd;
  d.L_minus = md * d.alpha_minus * d.alpha_minus + nd;
  d.lambda_plus = (d.delta_hat + d.Delta) / 2.0;
  d.lambda_minus = (d.delta_hat - d.Delta) / 2.0;
  return d;
}

JoinReduction::JoinReduction(const Graph& g, const Graph& h)
    : walk_(g),
      data_(join_spectral_data(g.order(), require_regular(g, "join operand G"), h.order(),
                               require_regular(h, "join operand H"))) {}

Amplitude JoinReduction::amplitude(VertexId a, VertexId b, double t) const {
  Amplitude base = walk_.amplitude(a, b, t);
  const auto& d = data_;
  const double half = d.Delta * t / 2.0;
  const std::complex<double> bracket = std::cos(half) - kI * (d.delta / d.Delta) * std::sin(half);
  const std::complex<double> correction =
      std::exp(-kI * t * static_cast<double>(d.kG)) / static_cast<double>(d.m) *
      (std::exp(kI * t * d.delta / 2.0) * bracket - 1.0);
  base.value += correction;
  return base;
}

Amplitude join_amplitude(const Graph& g, const Graph& h, VertexId a, VertexId b, double t) {
  return JoinReduction(g, h).amplitude(a, b, t);
}

SelfJoinReduction::SelfJoinReduction(const Graph& g, std::size_t copies) : walk_(g), copies_(copies) {
  if (copies == 0) throw std::invalid_argument("self-join needs at least one copy");
  require_regular(g, "self-join operand");
  column_sums_ = walk_.spectrum().vectors.colwise().sum().transpose();
}

Amplitude SelfJoinReduction::amplitude(VertexId a, VertexId b, double t) const {
  Amplitude base = walk_.amplitude(a, b, t);
  const auto& spec = walk_.spectrum();
  // <1_n| exp(-i t A_G) |a>
  std::complex<double> ones_amp = 0.0;
  for (std::size_t k = 0; k < spec.size(); ++k) {
    const auto kk = static_cast<Eigen::Index>(k);
    ones_amp += std::exp(-kI * t * spec.eigenvalues[k]) * column_sums_(kk) *
                spec.vectors(static_cast<Eigen::Index>(a.index), kk);
  }
  const double m = static_cast<double>(copies_), n = static_cast<double>(walk_.order());
  const std::complex<double> factor =
      ((m - 1.0) * (std::exp(kI * t * n) - 1.0) + std::exp(-kI * t * (m - 1.0) * n) - 1.0) / (m * n);
  base.value += factor * ones_amp;
  return base;
}

Amplitude self_join_amplitude(const Graph& g, std::size_t copies, VertexId a, VertexId b, double t) {
  return SelfJoinReduction(g, copies).amplitude(a, b, t);
}

double sin_sqrt_over_sqrt(double x, double t) {
  const double y = std::max(x, 0.0);
  const double arg2 = t * t * y;
  if (arg2 < 1e-8) return t * (1.0 - arg2 / 6.0 + arg2 * arg2 / 120.0);
  const double r = std::sqrt(y);
  return std::sin(t * r) / r;
}

CirculantJoinReduction::CirculantJoinReduction(const Graph& g, const CirculantSpec& connector) : walk_(g) {
  if (connector.order() != g.order()) throw std::invalid_argument("connector order does not match graph order");
  if (!circulant_row(g)) throw std::invalid_argument("circulant join reduction needs a circulant graph");
  const Eigen::MatrixXd c = to_matrix(connector).to_dense();
  c_transposed_ = c.transpose();
  b_spectrum_ = decompose(Eigen::MatrixXd(c_transposed_ * c));
}

Eigen::MatrixXd CirculantJoinReduction::transfer_matrix(std::size_t target_copy, double t) const {
  if (target_copy == 0)
    return matrix_function(b_spectrum_, [t](double x) { return std::cos(t * std::sqrt(std::max(x, 0.0))); });
  if (target_copy == 1)
    return matrix_function(b_spectrum_, [t](double x) { return sin_sqrt_over_sqrt(x, t); }) * c_transposed_;
  throw std::invalid_argument("target copy must be 0 or 1");
}

Amplitude CirculantJoinReduction::amplitude(VertexId a, std::size_t target_copy, VertexId b, double t) const {
  if (b.index >= walk_.order()) throw std::out_of_range("vertex out of range");
  const Eigen::VectorXcd state = walk_.evolve(a, t);
  const Eigen::MatrixXd m = transfer_matrix(target_copy, t);
  std::complex<double> value = m.row(static_cast<Eigen::Index>(b.index)).cast<std::complex<double>>().dot(state);
  // Eigen's dot conjugates its left operand; the row is real so that is harmless.
  if (target_copy == 1) value *= -kI;
  const std::size_t n = walk_.order();
  return Amplitude{value, t, a, VertexId{target_copy * n + b.index}};
}

Amplitude circulant_join_amplitude(const Graph& g, const CirculantSpec& connector, VertexId a,
                                   std::size_t target_copy, VertexId b, double t) {
  return CirculantJoinReduction(g, connector).amplitude(a, target_copy, b, t);
}

std::optional<int> circulant_join_condition(const Graph& g, const CirculantSpec& connector, std::size_t target_copy,
                                            double t, double tol) {
  const Eigen::MatrixXd m = CirculantJoinReduction(g, connector).transfer_matrix(target_copy, t);
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(m.rows(), m.cols());
  if ((m - id).cwiseAbs().maxCoeff() <= tol) return 1;
  if ((m + id).cwiseAbs().maxCoeff() <= tol) return -1;
  return std::nullopt;
}

bool connector_eigenvalue_check(std::size_t n, const DivisorSet& q_set, double tol) {
  const double unit = std::ldexp(1.0, static_cast<int>(split_two_adic(n).u));
  for (const auto& lambda : circulant_eigenvalues(connector(n, q_set))) {
    const double ratio = std::abs(lambda) / unit;
    if (std::abs(ratio - std::round(ratio)) * unit > tol) return false;
  }
  return true;
}

Amplitude cartesian_amplitude(const std::vector<ProductFactor>& parts, double t) {
  if (parts.empty()) throw std::invalid_argument("cartesian amplitude needs at least one factor");
  std::complex<double> value = 1.0;
  std::vector<std::size_t> orders, from, to;
  for (const auto& p : parts) {
    value *= amplitude(p.graph, p.a, p.b, t).value;
    orders.push_back(p.graph.order());
    from.push_back(p.a.index);
    to.push_back(p.b.index);
  }
  return Amplitude{value, t, VertexId{product_index(orders, from)}, VertexId{product_index(orders, to)}};
}

std::size_t product_index(const std::vector<std::size_t>& orders, const std::vector<std::size_t>& coords) {
  if (orders.size() != coords.size()) throw std::invalid_argument("coordinate count mismatch");
  std::size_t idx = 0;
  for (std::size_t j = 0; j < orders.size(); ++j) {
    if (coords[j] >= orders[j]) throw std::out_of_range("coordinate out of range");
    idx = idx * orders[j] + coords[j];
  }
  return idx;
}

std::vector<double> predicted_join_eigenvalues(const Graph& g, const Graph& h) {
  const auto d = join_spectral_data(g.order(), require_regular(g, "join operand G"), h.order(),
                                    require_regular(h, "join operand H"));
  auto drop_closest = [](std::vector<double> values, double target) {
    auto it = std::min_element(values.begin(), values.end(),
                               [target](double x, double y) { return std::abs(x - target) < std::abs(y - target); });
    values.erase(it);
    return values;
  };
  std::vector<double> out = drop_closest(decompose(g).eigenvalues, static_cast<double>(d.kG));
  const auto rest = drop_closest(decompose(h).eigenvalues, static_cast<double>(d.kH));
  out.insert(out.end(), rest.begin(), rest.end());
  out.push_back(d.lambda_plus);
  out.push_back(d.lambda_minus);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qwalk
