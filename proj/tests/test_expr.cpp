#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "qwalk/circulant.hpp"
#include "qwalk/expr.hpp"
#include "qwalk/operators.hpp"
#include "qwalk/time_expr.hpp"

using namespace qwalk;
using std::numbers::pi;

namespace {

Expr atom(ExprKind kind, std::vector<long long> numbers) { return Expr{kind, std::move(numbers), {}}; }

Expr node(ExprKind kind, std::vector<Expr> children, std::vector<long long> numbers = {}) {
  return Expr{kind, std::move(numbers), std::move(children)};
}

// Random syntactically valid trees over the full grammar; evaluation may still fail.
Expr random_expr(std::mt19937_64& rng, int depth) {
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
  auto num = [&](int lo, int hi) { return static_cast<long long>(lo + pick(hi - lo + 1)); };
  if (depth == 0 || pick(3) == 0) {
    switch (pick(9)) {
      case 0: {
        std::vector<long long> v{num(2, 30)};
        for (int i = pick(3) + 1; i > 0; --i) v.push_back(num(1, 15));
        return atom(ExprKind::Icg, v);
      }
      case 1: return atom(ExprKind::Cycle, {num(3, 12)});
      case 2: return atom(ExprKind::Path, {num(1, 12)});
      case 3: return atom(ExprKind::Complete, {num(1, 12)});
      case 4: return atom(ExprKind::Empty, {num(1, 12)});
      case 5: {
        std::vector<long long> v{num(3, 20)};
        for (int i = pick(3) + 1; i > 0; --i) v.push_back(num(1, 9));
        return atom(ExprKind::Circ, v);
      }
      case 6: {
        std::vector<long long> v{num(8, 48)};
        for (int i = pick(2) + 1; i > 0; --i) v.push_back(num(1, 9));
        return atom(ExprKind::Conn, v);
      }
      case 7: return atom(ExprKind::Shift, {num(2, 16), num(0, 15)});
      default: return atom(ExprKind::Ones, {num(1, 16)});
    }
  }
  switch (pick(5)) {
    case 0: return node(ExprKind::Join, {random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
    case 1: return node(ExprKind::Cart, {random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
    case 2: return node(ExprKind::SelfJoin, {random_expr(rng, depth - 1)}, {num(1, 4)});
    case 3: return node(ExprKind::CJoin, {random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
    default: return node(ExprKind::Complement, {random_expr(rng, depth - 1)});
  }
}

}  // namespace

TEST(Parse, Examples) {
  EXPECT_EQ(parse_expression("icg:8:1,4"), atom(ExprKind::Icg, {8, 1, 4}));
  EXPECT_EQ(parse_expression(" cycle:5 "), atom(ExprKind::Cycle, {5}));
  EXPECT_EQ(parse_expression("join(empty:2,cart(cycle:6,cycle:5))"),
            node(ExprKind::Join, {atom(ExprKind::Empty, {2}),
                                  node(ExprKind::Cart, {atom(ExprKind::Cycle, {6}), atom(ExprKind::Cycle, {5})})}));
  EXPECT_EQ(parse_expression("selfjoin(icg:8:1,4,3)"), node(ExprKind::SelfJoin, {atom(ExprKind::Icg, {8, 1, 4})}, {3}));
  EXPECT_EQ(parse_expression("selfjoin(cycle:4,3)"), node(ExprKind::SelfJoin, {atom(ExprKind::Cycle, {4})}, {3}));
  EXPECT_EQ(parse_expression("cjoin(icg:24:1,12,conn:24:3)"),
            node(ExprKind::CJoin, {atom(ExprKind::Icg, {24, 1, 12}), atom(ExprKind::Conn, {24, 3})}));
}

TEST(Parse, ErrorsCarryPositionAndExpectation) {
  const std::vector<std::pair<std::string, std::size_t>> bad{
      {"", 0}, {"join(cycle:4", 12}, {"cycle", 5}, {"cycle:", 6}, {"foo:3", 0},
      {"cycle:4)", 7}, {"join(cycle:4;cycle:3)", 12}, {"icg:8:", 6}, {"selfjoin(cycle:4)", 16}};
  for (const auto& [text, pos] : bad) {
    try {
      parse_expression(text);
      ADD_FAILURE() << "accepted '" << text << "'";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.position(), pos) << text;
      EXPECT_FALSE(e.expected().empty());
    }
  }
}

TEST(Parse, RenderRoundTrip) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const Expr e = random_expr(rng, 1 + trial % 4);
    const std::string text = render(e);
    const Expr back = parse_expression(text);
    ASSERT_EQ(back, e) << text;
    ASSERT_EQ(render(back), text);
  }
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(evaluate_graph("cycle:4"), cycle(4));
  EXPECT_EQ(evaluate_graph("icg:8:1,4"), icg(8, {1, 4}));
  EXPECT_EQ(evaluate_graph("circ:6:1"), cycle(6));
  EXPECT_EQ(evaluate_graph("selfjoin(icg:8:1,4,3)"), self_join(icg(8, {1, 4}), 3));
  EXPECT_EQ(evaluate_graph("cjoin(icg:24:1,12,conn:24:3)"), icg(48, {2, 24, 3}));
  EXPECT_EQ(evaluate_graph("cjoin(icg:8:1,4,shift:8:3)"),
            circulant_join(icg(8, {1, 4}), circulant_permutation(8, 3), JoinLayout::Interleaved));
  EXPECT_EQ(evaluate_graph("complement(cycle:5)"), complement(cycle(5)));
  EXPECT_EQ(evaluate_graph("join(empty:2,empty:2)").order(), 4u);
  EXPECT_TRUE(std::holds_alternative<CirculantSpec>(evaluate(parse_expression("ones:4"))));
}

TEST(Evaluate, DomainErrors) {
  EXPECT_THROW(evaluate_graph("conn:24:3"), std::invalid_argument);
  EXPECT_THROW(evaluate_graph("cjoin(cycle:4,cycle:4)"), std::invalid_argument);
  EXPECT_THROW(evaluate_graph("icg:8:3"), std::invalid_argument);
  EXPECT_THROW(evaluate_graph("circ:6:6"), std::invalid_argument);
  EXPECT_THROW(evaluate_graph("cjoin(icg:8:1,4,ones:6)"), std::invalid_argument);
  EXPECT_THROW(evaluate_graph("selfjoin(cycle:4,0)"), std::invalid_argument);
}

TEST(SymbolicSpectrum, CoversCyclesJoinsAndIcgs) {
  for (const char* text : {"join(empty:2,cart(cycle:6,cycle:5))", "icg:8:1,4", "cart(path:3,complete:2)",
                           "join(complete:2,icg:24:1,12)", "cart(cycle:10,cycle:7)"}) {
    const Expr e = parse_expression(text);
    const auto forms = symbolic_spectrum(e);
    ASSERT_TRUE(forms.has_value()) << text;
    std::vector<double> got;
    for (const auto& f : *forms) got.push_back(f.value());
    std::sort(got.begin(), got.end());
    const auto want = decompose(evaluate_graph(e)).eigenvalues;
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-9) << text;
  }
  EXPECT_FALSE(symbolic_spectrum(parse_expression("complement(cycle:5)")).has_value());
}

TEST(TopLevelJoinData, Examples) {
  const auto d = top_level_join_data(parse_expression("join(empty:2,cart(cycle:6,cycle:5))"));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->Delta, 16.0);
  EXPECT_FALSE(top_level_join_data(parse_expression("cycle:4")).has_value());
  EXPECT_FALSE(top_level_join_data(parse_expression("join(path:3,cycle:4)")).has_value());
}

TEST(ParseTime, Examples) {
  EXPECT_EQ(parse_time("pi/2"), pi / 2);
  EXPECT_EQ(parse_time("3pi/2"), 3 * pi / 2);
  EXPECT_EQ(parse_time("3*pi/2"), 3 * pi / 2);
  EXPECT_EQ(parse_time("pi"), pi);
  EXPECT_EQ(parse_time("4pi"), 4 * pi);
  EXPECT_EQ(parse_time("pi/sqrt2"), pi / std::sqrt(2.0));
  EXPECT_EQ(parse_time("pi/sqrt(2)"), pi / std::sqrt(2.0));
  EXPECT_EQ(parse_time("2pi/Delta", 4.0), pi / 2);
  EXPECT_EQ(parse_time("12.566"), 12.566);
  EXPECT_EQ(parse_time("1e-3"), 1e-3);
  EXPECT_THROW(parse_time("2pi/Delta"), std::invalid_argument);
  EXPECT_THROW(parse_time("pie"), std::invalid_argument);
  EXPECT_THROW(parse_time(""), std::invalid_argument);
  EXPECT_THROW(parse_time("pi/0"), std::invalid_argument);
}
