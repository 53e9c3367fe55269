#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qwalk/circulant.hpp"
#include "qwalk/operators.hpp"
#include "qwalk/reductions.hpp"

using namespace qwalk;
using std::numbers::pi;

namespace {

std::vector<Graph> regular_corpus() {
  return {cycle(3),       cycle(4),        cycle(5),         cycle(6),        complete(1),
          complete(2),    complete(4),     empty_graph(2),   empty_graph(3),  icg(8, {1, 4}),
          icg(8, {1, 2}), icg(6, {1, 2}),  icg(12, {1, 6}),  icg(9, {3}),     cartesian(cycle(3), cycle(4))};
}

double max_diff(const std::function<std::complex<double>(double)>& f, const Eigen::MatrixXd& composite, std::size_t a,
                std::size_t b) {
  double worst = 0.0;
  for (double t : oracle::times64()) worst = std::max(worst, std::abs(f(t) - oracle::amplitude(composite, a, b, t)));
  return worst;
}

}  // namespace

TEST(JoinSpectralData, Examples) {
  const auto p3 = join_spectral_data(2, 0, 1, 0);
  EXPECT_NEAR(p3.Delta, 2.0 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(p3.lambda_plus, std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(p3.lambda_minus, -std::sqrt(2.0), 1e-12);
  const auto grid = join_spectral_data(2, 0, 30, 4);
  EXPECT_EQ(grid.Delta, 16.0);
  EXPECT_EQ(grid.lambda_plus, 10.0);
  EXPECT_EQ(grid.lambda_minus, -6.0);
  const auto cone = join_spectral_data(2, 1, 24, 9);
  EXPECT_EQ(cone.delta, -8.0);
  EXPECT_EQ(cone.Delta, 16.0);
  EXPECT_THROW(join_spectral_data(0, 0, 1, 0), std::invalid_argument);
  EXPECT_THROW(join_spectral_data(3, 3, 1, 0), std::invalid_argument);
}

TEST(JoinSpectralData, Identities) {
  for (std::size_t m = 1; m <= 40; ++m)
    for (std::size_t n = 1; n <= 40; ++n)
      for (std::size_t kg : {std::size_t{0}, m / 2, m - 1})
        for (std::size_t kh : {std::size_t{0}, n / 3, n - 1}) {
          const auto d = join_spectral_data(m, kg, n, kh);
          const double md = static_cast<double>(m), nd = static_cast<double>(n);
          const double scale = 1.0 + d.Delta * d.Delta;
          EXPECT_NEAR(d.alpha_plus * d.alpha_minus, -nd / md, 1e-10);
          EXPECT_NEAR(d.alpha_plus + d.alpha_minus, d.delta / md, 1e-10);
          EXPECT_NEAR(d.L_plus + d.L_minus, d.Delta * d.Delta / md, 1e-10 * scale);
          EXPECT_NEAR(d.L_plus * d.L_minus, nd / md * d.Delta * d.Delta, 1e-10 * scale * scale);
          EXPECT_NEAR(d.alpha_plus * d.alpha_plus * d.L_minus, nd / md * d.L_plus, 1e-10 * scale * scale);
          EXPECT_NEAR(d.lambda_plus, static_cast<double>(kh) + md * d.alpha_plus, 1e-10 * scale);
          EXPECT_NEAR(d.lambda_minus, static_cast<double>(kh) + md * d.alpha_minus, 1e-10 * scale);
        }
}

TEST(JoinAmplitude, Examples) {
  const Amplitude p3 = join_amplitude(empty_graph(2), complete(1), {0}, {1}, pi / std::sqrt(2.0));
  EXPECT_NEAR(p3.value.real(), -1.0, 1e-12);
  EXPECT_NEAR(p3.value.imag(), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(join_amplitude(empty_graph(2), cycle(7), {0}, {1}, 0.0).value), 0.0, 1e-15);
  EXPECT_NEAR(join_amplitude(empty_graph(2), cartesian(cycle(6), cycle(5)), {0}, {1}, pi / 2).magnitude(), 1.0, 1e-9);
  EXPECT_THROW(join_amplitude(path(3), cycle(4), {0}, {1}, 1.0), std::invalid_argument);
}

TEST(JoinAmplitude, MatchesTaylorOracle) {
  const auto corpus = regular_corpus();
  std::mt19937_64 rng(21);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i; j < corpus.size(); j += 3) {
      const Graph& g = corpus[i];
      const Graph& h = corpus[j];
      const JoinReduction red(g, h);
      const std::size_t a = rng() % g.order(), b = rng() % g.order();
      const double d = max_diff([&](double t) { return red.amplitude({a}, {b}, t).value; },
                                join(g, h).adjacency_matrix(), a, b);
      EXPECT_LE(d, 1e-9) << i << "," << j;
      ++pairs;
    }
  EXPECT_GE(pairs, 20u);
}

TEST(JoinSpectrum, ThreeEigenvectorFamiliesReconstructSpectrum) {
  for (const auto& g : regular_corpus())
    for (const auto& h : {empty_graph(2), complete(2), cycle(5), icg(8, {1, 4})}) {
      const auto predicted = predicted_join_eigenvalues(g, h);
      const auto actual = decompose(join(g, h)).eigenvalues;
      ASSERT_EQ(predicted.size(), actual.size());
      for (std::size_t k = 0; k < actual.size(); ++k) EXPECT_NEAR(predicted[k], actual[k], 1e-9);
    }
}

TEST(SelfJoinAmplitude, Examples) {
  for (double t : {0.3, 1.1, 2.9})
    EXPECT_LT(std::abs(self_join_amplitude(cycle(5), 1, {0}, {2}, t).value - amplitude(cycle(5), {0}, {2}, t).value),
              1e-12);
  EXPECT_NEAR(self_join_amplitude(icg(8, {1, 4}), 3, {0}, {4}, pi / 2).magnitude(), 1.0, 1e-9);
  EXPECT_NEAR(self_join_amplitude(cycle(4), 2, {0}, {2}, pi / 2).magnitude(), 1.0, 1e-9);
  EXPECT_THROW(self_join_amplitude(path(3), 2, {0}, {2}, 1.0), std::invalid_argument);
  EXPECT_THROW(self_join_amplitude(cycle(4), 0, {0}, {2}, 1.0), std::invalid_argument);
}

TEST(SelfJoinAmplitude, MatchesTaylorOracle) {
  std::mt19937_64 rng(23);
  for (const auto& g : regular_corpus())
    for (std::size_t m = 1; m <= 3; ++m) {
      const SelfJoinReduction red(g, m);
      const std::size_t a = rng() % g.order(), b = rng() % g.order();
      const double d = max_diff([&](double t) { return red.amplitude({a}, {b}, t).value; },
                                self_join(g, m).adjacency_matrix(), a, b);
      EXPECT_LE(d, 1e-9);
    }
}

TEST(SinSqrtOverSqrt, ContinuousAtZero) {
  EXPECT_EQ(sin_sqrt_over_sqrt(0.0, 2.5), 2.5);
  EXPECT_NEAR(sin_sqrt_over_sqrt(1e-14, 2.5), 2.5, 1e-12);
  EXPECT_NEAR(sin_sqrt_over_sqrt(4.0, 1.0), std::sin(2.0) / 2.0, 1e-15);
  EXPECT_EQ(sin_sqrt_over_sqrt(-1e-15, 3.0), 3.0);
}

TEST(CirculantJoinAmplitude, Examples) {
  const Graph g = icg(8, {1, 4});
  const QuantumWalk base(g);
  for (double t : {pi / 2, 3 * pi / 2}) {
    const auto bunk = circulant_join_amplitude(g, identity_spec(8), {0}, 1, {4}, t).value;
    const auto direct = base.amplitude({0}, {4}, t).value;
    EXPECT_LT(std::min(std::abs(bunk - std::complex<double>(0, 1) * direct),
                       std::abs(bunk + std::complex<double>(0, 1) * direct)),
              1e-12);
  }
  EXPECT_NEAR(circulant_join_amplitude(g, all_ones_spec(8), {0}, 0, {4}, pi / 2).magnitude(), 1.0, 1e-9);
  // A shift by k sends b to (b + k) mod n in the other copy.
  for (std::size_t k = 0; k < 8; ++k)
    EXPECT_NEAR(circulant_join_amplitude(g, circulant_permutation(8, k), {0}, 1, {(4 + k) % 8}, pi / 2).magnitude(),
                1.0, 1e-9);
  EXPECT_EQ(circulant_join_condition(g, identity_spec(8), 1, pi / 2).value_or(0) != 0, true);
  EXPECT_FALSE(circulant_join_condition(g, identity_spec(8), 1, pi / 3).has_value());
}

TEST(CirculantJoinAmplitude, MatchesTaylorOracle) {
  std::mt19937_64 rng(29);
  for (std::size_t n : {8, 16, 24}) {
    std::vector<CirculantSpec> connectors{identity_spec(n), all_ones_spec(n), circulant_permutation(n, 1),
                                          circulant_permutation(n, n - 3)};
    if (n == 24)
      for (const DivisorSet& q : {DivisorSet{1}, DivisorSet{3}, DivisorSet{1, 3}}) connectors.push_back(connector(n, q));
    for (std::size_t d : {n / 4, n / 2}) {
      const Graph g = icg(n, {1, d});
      for (const auto& c : connectors) {
        const CirculantJoinReduction red(g, c);
        const Eigen::MatrixXd composite = circulant_join(g, c, JoinLayout::Block).adjacency_matrix();
        const std::size_t a = rng() % n, b = rng() % n;
        for (std::size_t s = 0; s < 2; ++s) {
          const double diff = max_diff([&](double t) { return red.amplitude({a}, s, {b}, t).value; }, composite, a,
                                       s * n + b);
          EXPECT_LE(diff, 1e-9) << n << " copy " << s;
        }
      }
    }
  }
}

TEST(CirculantJoinAmplitude, SingularGramMatrix) {
  // C = J gives B = nJ, singular for n > 1; the s = 1 branch still matches the oracle.
  const Graph g = cycle(6);
  const CirculantJoinReduction red(g, all_ones_spec(6));
  const Eigen::MatrixXd composite = circulant_join(g, all_ones_spec(6), JoinLayout::Block).adjacency_matrix();
  for (double t : oracle::times64())
    EXPECT_LT(std::abs(red.amplitude({1}, 1, {4}, t).value - oracle::amplitude(composite, 1, 10, t)), 1e-9);
}

TEST(ConnectorEigenvalueCheck, Examples) {
  EXPECT_TRUE(connector_eigenvalue_check(24, {3}));
  EXPECT_NEAR(circulant_eigenvalues(connector(24, {3}))[0].real(), 8.0, 1e-12);
  EXPECT_TRUE(connector_eigenvalue_check(24, {1}));
  EXPECT_NEAR(circulant_eigenvalues(connector(24, {1}))[0].real(), 16.0, 1e-12);
  EXPECT_TRUE(connector_eigenvalue_check(48, {3}));
  for (std::size_t n : {40, 72, 120})
    for (std::size_t q : all_divisors(split_two_adic(n).m)) EXPECT_TRUE(connector_eigenvalue_check(n, {q})) << n;
}

TEST(CartesianAmplitude, Examples) {
  const std::vector<ProductFactor> cube(3, ProductFactor{complete(2), {0}, {1}});
  EXPECT_NEAR(cartesian_amplitude(cube, pi / 2).magnitude(), 1.0, 1e-12);
  const std::vector<ProductFactor> grid(2, ProductFactor{path(3), {0}, {2}});
  EXPECT_NEAR(cartesian_amplitude(grid, pi / std::sqrt(2.0)).magnitude(), 1.0, 1e-12);
  const std::vector<ProductFactor> still{{cycle(5), {2}, {2}}, {path(4), {1}, {1}}};
  EXPECT_NEAR(std::abs(cartesian_amplitude(still, 0.0).value - 1.0), 0.0, 1e-15);
}

TEST(CartesianAmplitude, MatchesTaylorOracle) {
  const std::vector<std::vector<Graph>> products{{complete(2), complete(2), complete(2)},
                                                 {path(3), path(3)},
                                                 {icg(8, {1, 4}), cycle(3)},
                                                 {cycle(3), path(4), complete(2)}};
  std::mt19937_64 rng(31);
  for (const auto& factors : products) {
    Graph whole = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) whole = cartesian(whole, factors[i]);
    std::vector<ProductFactor> parts;
    std::vector<std::size_t> orders, ca, cb;
    for (const auto& f : factors) {
      ca.push_back(rng() % f.order());
      cb.push_back(rng() % f.order());
      orders.push_back(f.order());
      parts.push_back({f, {ca.back()}, {cb.back()}});
    }
    const double d = max_diff([&](double t) { return cartesian_amplitude(parts, t).value; }, whole.adjacency_matrix(),
                              product_index(orders, ca), product_index(orders, cb));
    EXPECT_LE(d, 1e-9);
  }
  EXPECT_EQ(product_index({3, 4, 5}, {2, 1, 3}), 2u * 20 + 1 * 5 + 3);
}

TEST(CompleteGraphPowers, IntegerIdentity) {
  // m * A_{K_m}^l = (-1)^l (m I - J) + (m-1)^l J, exactly in integers.
  using IMat = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
  for (long long m = 1; m <= 8; ++m) {
    const IMat j = IMat::Ones(m, m);
    const IMat id = IMat::Identity(m, m);
    const IMat a = j - id;
    IMat power = id;
    long long sign = 1, top = 1;
    for (int l = 1; l <= 12; ++l) {
      power = power * a;
      sign = -sign;
      top *= (m - 1);
      const IMat lhs = m * power;
      const IMat rhs = sign * (m * id - j) + top * j;
      ASSERT_TRUE(lhs == rhs) << m << "^" << l;
    }
  }
}
