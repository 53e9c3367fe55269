#pragma once

// Textual graph expressions, e.g.  join(empty:2,cart(cycle:6,cycle:5))
//
//   atoms:     icg:n:d,...   cycle:n   path:n   complete:n   empty:n
//              circ:n:s,...  (circulant graph with connection set +-s)
//              conn:n:q,...  shift:n:k   ones:n   (connectors, cjoin only)
//   operators: join(a,b)  cart(a,b)  selfjoin(a,m)  cjoin(a,c)  complement(a)
//
// List atoms consume every following ",<integer>". Inside selfjoin the final
// integer is always the copy count, so selfjoin(icg:8:1,4,3) is three copies
// of icg:8:1,4.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qwalk/circulant.hpp"
#include "qwalk/closed_form.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/reductions.hpp"

namespace qwalk {

enum class ExprKind { Icg, Cycle, Path, Complete, Empty, Circ, Conn, Shift, Ones, Join, Cart, SelfJoin, CJoin, Complement };

struct Expr {
  ExprKind kind = ExprKind::Empty;
  std::vector<long long> numbers;  // atom parameters; the copy count for selfjoin
  std::vector<Expr> children;

  bool operator==(const Expr&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::string expected, std::string_view input);

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

Expr parse_expression(std::string_view text);
std::string render(const Expr& e);

using ExprValue = std::variant<Graph, CirculantSpec>;

/// Evaluates an expression; cjoin uses the interleaved layout. Throws
/// std::invalid_argument on type or domain errors.
ExprValue evaluate(const Expr& e);
Graph evaluate_graph(const Expr& e);
Graph evaluate_graph(std::string_view text);

/// Exact eigenvalue forms when the expression is built from cycles, paths,
/// complete, empty and integral circulant atoms through cart and join.
std::optional<std::vector<ClosedForm>> symbolic_spectrum(const Expr& e);

/// Join spectral data when the top-level operator is a join of regular graphs.
std::optional<JoinSpectralData> top_level_join_data(const Expr& e);

}  // namespace qwalk
