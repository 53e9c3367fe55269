#include "qwalk/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <map>

#include "qwalk/operators.hpp"

namespace qwalk {

ParseError::ParseError(std::size_t position, std::string expected, std::string_view input)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": expected " + expected + "\n  " +
                         std::string(input) + "\n  " + std::string(position, ' ') + "^"),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

enum class Arity { Single, SingleWithList, Pair };

struct AtomInfo {
  ExprKind kind;
  Arity arity;
};

const std::map<std::string, AtomInfo, std::less<>>& atoms() {
  static const std::map<std::string, AtomInfo, std::less<>> table{
      {"icg", {ExprKind::Icg, Arity::SingleWithList}},   {"cycle", {ExprKind::Cycle, Arity::Single}},
      {"path", {ExprKind::Path, Arity::Single}},         {"complete", {ExprKind::Complete, Arity::Single}},
      {"empty", {ExprKind::Empty, Arity::Single}},       {"circ", {ExprKind::Circ, Arity::SingleWithList}},
      {"conn", {ExprKind::Conn, Arity::SingleWithList}}, {"shift", {ExprKind::Shift, Arity::Pair}},
      {"ones", {ExprKind::Ones, Arity::Single}},
  };
  return table;
}

const std::map<std::string, ExprKind, std::less<>>& operators() {
  static const std::map<std::string, ExprKind, std::less<>> table{
      {"join", ExprKind::Join},         {"cart", ExprKind::Cart},   {"selfjoin", ExprKind::SelfJoin},
      {"cjoin", ExprKind::CJoin},       {"complement", ExprKind::Complement},
  };
  return table;
}

std::string name_of(ExprKind kind) {
  for (const auto& [name, info] : atoms())
    if (info.kind == kind) return name;
  for (const auto& [name, k] : operators())
    if (k == kind) return name;
  return "?";
}

bool is_list_atom(ExprKind k) { return k == ExprKind::Icg || k == ExprKind::Circ || k == ExprKind::Conn; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("end of expression");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const { throw ParseError(pos_, expected, text_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("'") + c + "'");
    ++pos_;
  }

  bool peek_integer() {
    skip_ws();
    std::size_t p = pos_;
    if (p < text_.size() && text_[p] == '-') ++p;
    return p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]));
  }

  long long integer() {
    if (!peek_integer()) fail("integer");
    long long v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc()) fail("integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // ",<int>" continuation of a list atom; commas before anything else are left alone.
  bool list_continues() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != ',') return false;
    const std::size_t save = pos_;
    ++pos_;
    const bool more = peek_integer();
    pos_ = save;
    return more;
  }

  Expr expr() {
    const std::size_t start = (skip_ws(), pos_);
    const std::string name = identifier();
    if (auto it = atoms().find(name); it != atoms().end()) return atom(it->second);
    if (auto it = operators().find(name); it != operators().end()) return op(it->second);
    pos_ = start;
    fail("graph atom (icg, cycle, path, complete, empty, circ, conn, shift, ones) or operator (join, cart, selfjoin, "
         "cjoin, complement)");
  }

  Expr atom(const AtomInfo& info) {
    Expr e{info.kind, {}, {}};
    expect(':');
    e.numbers.push_back(integer());
    if (info.arity == Arity::Pair) {
      expect(':');
      e.numbers.push_back(integer());
    } else if (info.arity == Arity::SingleWithList) {
      expect(':');
      e.numbers.push_back(integer());
      while (list_continues()) {
        expect(',');
        e.numbers.push_back(integer());
      }
    }
    return e;
  }

  Expr op(ExprKind kind) {
    Expr e{kind, {}, {}};
    expect('(');
    e.children.push_back(expr());
    switch (kind) {
      case ExprKind::Complement: break;
      case ExprKind::SelfJoin: {
        Expr& child = e.children.front();
        if (peek(')') && is_list_atom(child.kind) && child.numbers.size() >= 3) {
          e.numbers.push_back(child.numbers.back());
          child.numbers.pop_back();
        } else {
          expect(',');
          e.numbers.push_back(integer());
        }
        break;
      }
      default:
        expect(',');
        e.children.push_back(expr());
        break;
    }
    expect(')');
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::size_t as_size(long long v, const char* what) {
  if (v < 0) throw std::invalid_argument(std::string(what) + " must be non-negative");
  return static_cast<std::size_t>(v);
}

DivisorSet tail_set(const Expr& e) {
  DivisorSet s;
  for (std::size_t i = 1; i < e.numbers.size(); ++i) s.insert(as_size(e.numbers[i], "divisor"));
  return s;
}

Graph as_graph(ExprValue v, const Expr& e) {
  if (auto* g = std::get_if<Graph>(&v)) return std::move(*g);
  throw std::invalid_argument("'" + render(e) + "' is a connector, not a graph");
}

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string render(const Expr& e) {
  std::string out = name_of(e.kind);
  if (e.children.empty()) {
    for (std::size_t i = 0; i < e.numbers.size(); ++i) {
      out += i <= 1 ? ":" : ",";
      out += std::to_string(e.numbers[i]);
    }
    return out;
  }
  out += "(";
  for (std::size_t i = 0; i < e.children.size(); ++i) {
    if (i) out += ",";
    out += render(e.children[i]);
  }
  for (long long x : e.numbers) out += "," + std::to_string(x);
  return out + ")";
}

ExprValue evaluate(const Expr& e) {
  const auto n = [&] { return as_size(e.numbers.at(0), "order"); };
  switch (e.kind) {
    case ExprKind::Icg: return icg(n(), tail_set(e));
    case ExprKind::Cycle: return cycle(n());
    case ExprKind::Path: return path(n());
    case ExprKind::Complete: return complete(n());
    case ExprKind::Empty: return empty_graph(n());
    case ExprKind::Circ: {
      std::vector<long long> set;
      for (std::size_t i = 1; i < e.numbers.size(); ++i) {
        if (e.numbers[i] % e.numbers[0] == 0) throw std::invalid_argument("circulant connection set may not contain 0");
        set.push_back(e.numbers[i]);
        set.push_back(-e.numbers[i]);
      }
      return circulant_graph(circulant_from_set(n(), set));
    }
    case ExprKind::Conn: return connector(n(), tail_set(e));
    case ExprKind::Shift: return circulant_permutation(n(), as_size(e.numbers.at(1), "shift"));
    case ExprKind::Ones: return all_ones_spec(n());
    case ExprKind::Join:
      return join(as_graph(evaluate(e.children[0]), e.children[0]), as_graph(evaluate(e.children[1]), e.children[1]));
    case ExprKind::Cart:
      return cartesian(as_graph(evaluate(e.children[0]), e.children[0]),
                       as_graph(evaluate(e.children[1]), e.children[1]));
    case ExprKind::SelfJoin:
      return self_join(as_graph(evaluate(e.children[0]), e.children[0]), as_size(e.numbers.at(0), "copy count"));
    case ExprKind::Complement: return complement(as_graph(evaluate(e.children[0]), e.children[0]));
    case ExprKind::CJoin: {
      ExprValue c = evaluate(e.children[1]);
      auto* spec = std::get_if<CirculantSpec>(&c);
      if (!spec) throw std::invalid_argument("second argument of cjoin must be a connector (conn, shift, ones)");
      return circulant_join(as_graph(evaluate(e.children[0]), e.children[0]), *spec, JoinLayout::Interleaved);
    }
  }
  throw std::logic_error("unhandled expression kind");
}

Graph evaluate_graph(const Expr& e) { return as_graph(evaluate(e), e); }

Graph evaluate_graph(std::string_view text) { return evaluate_graph(parse_expression(text)); }

std::optional<std::vector<ClosedForm>> symbolic_spectrum(const Expr& e) {
  const auto n = [&] { return as_size(e.numbers.at(0), "order"); };
  switch (e.kind) {
    case ExprKind::Cycle: return cycle_closed_forms(n());
    case ExprKind::Path: return path_closed_forms(n());
    case ExprKind::Complete: return complete_closed_forms(n());
    case ExprKind::Empty: return integer_closed_forms(std::vector<long long>(n(), 0));
    case ExprKind::Icg: {
      // Integral by the gcd-class structure, so rounding the Fourier sums is exact.
      std::vector<long long> values;
      for (const auto& x : circulant_eigenvalues(icg_spec(n(), tail_set(e)))) values.push_back(std::llround(x.real()));
      return integer_closed_forms(values);
    }
    case ExprKind::Cart: {
      auto a = symbolic_spectrum(e.children[0]);
      auto b = symbolic_spectrum(e.children[1]);
      if (!a || !b) return std::nullopt;
      for (const auto& x : *a)
        if (x.sqrt_sign != 0)
          for (const auto& y : *b)
            if (y.sqrt_sign != 0) return std::nullopt;
      return cartesian_closed_forms(*a, *b);
    }
    case ExprKind::Join: {
      auto a = symbolic_spectrum(e.children[0]);
      auto b = symbolic_spectrum(e.children[1]);
      if (!a || !b) return std::nullopt;
      const Graph g = evaluate_graph(e.children[0]);
      const Graph h = evaluate_graph(e.children[1]);
      const auto kg = regularity(g), kh = regularity(h);
      if (!kg || !kh) return std::nullopt;
      return join_closed_forms(*a, static_cast<long long>(*kg), *b, static_cast<long long>(*kh));
    }
    default: return std::nullopt;
  }
}

std::optional<JoinSpectralData> top_level_join_data(const Expr& e) {
  if (e.kind != ExprKind::Join) return std::nullopt;
  const Graph g = evaluate_graph(e.children[0]);
  const Graph h = evaluate_graph(e.children[1]);
  const auto kg = regularity(g), kh = regularity(h);
  if (!kg || !kh) return std::nullopt;
  return join_spectral_data(g.order(), *kg, h.order(), *kh);
}

}  // namespace qwalk
