// qwalk: spectra, transfer checks, reductions and the claim regression suite
// for continuous-time quantum walks on graph expressions.
//
// Exit codes: 0 success, 1 a checked claim failed, 2 usage or parse error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qwalk/expr.hpp"
#include "qwalk/kernels.hpp"
#include "qwalk/operators.hpp"
#include "qwalk/pst.hpp"
#include "qwalk/reductions.hpp"
#include "qwalk/report.hpp"
#include "qwalk/time_expr.hpp"
#include "qwalk/verify.hpp"

namespace {

using namespace qwalk;

constexpr int kOk = 0;
constexpr int kClaimFailed = 1;
constexpr int kUsage = 2;

struct Globals {
  std::string format = "plain";
  double tol = kPstTolerance;
  std::uint64_t seed = 1;
  OutputFormat fmt() const { return *parse_format(format); }
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

VertexId vertex(const Graph& g, long long v, const char* what) {
  if (v < 0 || static_cast<std::size_t>(v) >= g.order())
    throw UsageError(std::string(what) + " " + std::to_string(v) + " out of range for a graph on " +
                     std::to_string(g.order()) + " vertices");
  return VertexId{static_cast<std::size_t>(v)};
}

std::optional<double> join_delta(const Expr& e) {
  if (auto d = top_level_join_data(e)) return d->Delta;
  return std::nullopt;
}

void emit_table(const Globals& gl, const Table& t, const std::string& json) {
  switch (gl.fmt()) {
    case OutputFormat::Json: std::cout << json << "\n"; break;
    case OutputFormat::Csv: std::cout << to_csv(t); break;
    case OutputFormat::Plain: std::cout << to_plain(t); break;
  }
}

// ---- spectrum --------------------------------------------------------------

int cmd_spectrum(const Globals& gl, const std::string& text) {
  const Expr e = parse_expression(text);
  const Graph g = evaluate_graph(e);
  const Spectrum spec = decompose(g);
  const auto cert = periodicity_certificate(g, symbolic_spectrum(e));

  Table t{{"index", "eigenvalue", "integral", "nearest"}, {}};
  std::vector<std::string> values, flags, nearest;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const double x = spec.eigenvalues[i];
    const bool integral = std::abs(x - std::round(x)) <= 1e-9;
    t.rows.push_back({std::to_string(i), format_double(x), integral ? "true" : "false",
                      std::to_string(std::llround(x))});
    values.push_back(json_number(x));
    flags.push_back(integral ? "true" : "false");
    nearest.push_back(integral ? std::to_string(std::llround(x)) : "null");
  }
  const std::string json = JsonObject()
                               .str("graph", render(e))
                               .integer("order", static_cast<long long>(g.order()))
                               .raw("eigenvalues", json_array(values))
                               .raw("integral", json_array(flags))
                               .raw("nearest", json_array(nearest))
                               .str("periodicity", to_string(cert.verdict))
                               .dump();
  emit_table(gl, t, json);
  if (gl.fmt() == OutputFormat::Plain) std::cout << "periodicity: " << to_string(cert.verdict) << "\n";
  return kOk;
}

// ---- pst -------------------------------------------------------------------

struct PstArgs {
  std::string expr;
  long long a = 0;
  std::optional<long long> b;
  std::optional<std::string> t;
  std::optional<std::string> search;
  std::size_t grid = 4096;
  bool expect = false;
};

int cmd_pst(const Globals& gl, const PstArgs& args) {
  if (args.t.has_value() == args.search.has_value()) throw UsageError("give exactly one of --t or --search");
  const Expr e = parse_expression(args.expr);
  const Graph g = evaluate_graph(e);
  const VertexId a = vertex(g, args.a, "vertex a");
  const PstAnalyzer analyzer(g);
  const std::string name = render(e);

  std::vector<PstVerdict> verdicts;
  if (args.t) {
    if (!args.b) throw UsageError("--t needs a target vertex b");
    const VertexId b = vertex(g, *args.b, "vertex b");
    if (a == b) throw UsageError("a and b must differ");
    verdicts.push_back(analyzer.check(a, b, parse_time(*args.t, join_delta(e)), gl.tol));
  } else {
    SearchOptions opts;
    opts.pst_tolerance = gl.tol;
    verdicts = analyzer.search(a, parse_time(*args.search, join_delta(e)), args.grid, opts);
    if (args.b) {
      const VertexId b = vertex(g, *args.b, "vertex b");
      std::erase_if(verdicts, [&](const PstVerdict& v) { return v.b != b; });
    }
  }

  std::vector<std::string> items;
  for (const auto& v : verdicts) items.push_back(verdict_json(name, v, "cli"));
  emit_table(gl, verdict_table(name, verdicts, "cli"), json_array(items));

  const bool any = std::any_of(verdicts.begin(), verdicts.end(), [](const PstVerdict& v) { return v.found; });
  return args.expect && !any ? kClaimFailed : kOk;
}

// ---- verify-paper ----------------------------------------------------------

int cmd_verify(const Globals& gl, const std::string& filter) {
  VerifyOptions opts{filter, gl.tol, gl.seed};
  const auto results = run_verification(opts);
  if (results.empty()) throw UsageError("filter '" + filter + "' selects no checks");

  Table t{{"check", "source", "tags", "status", "fidelity", "max_absdiff", "detail"}, {}};
  std::vector<std::string> items;
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    std::string tags;
    for (const auto& x : r.tags) tags += (tags.empty() ? "" : ";") + x;
    t.rows.push_back({r.name, r.source, tags, r.passed ? "PASS" : "FAIL",
                      std::isnan(r.fidelity) ? "" : format_double(r.fidelity),
                      std::isnan(r.max_absdiff) ? "" : format_double(r.max_absdiff), r.detail});
    std::vector<std::string> tag_json;
    for (const auto& x : r.tags) tag_json.push_back(json_string(x));
    items.push_back(JsonObject()
                        .str("check", r.name)
                        .str("source", r.source)
                        .raw("tags", json_array(tag_json))
                        .boolean("passed", r.passed)
                        .num("fidelity", r.fidelity)
                        .num("maxAbsDiff", r.max_absdiff)
                        .str("detail", r.detail)
                        .dump());
  }
  emit_table(gl, t, json_array(items));
  return all ? kOk : kClaimFailed;
}

// ---- export ----------------------------------------------------------------

int cmd_export(const std::string& text, const std::string& path) {
  const Graph g = evaluate_graph(parse_expression(text));
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_edge_list(out, g);
  out.flush();
  if (!out) throw std::runtime_error("write to " + path + " failed");
  return kOk;
}

// ---- reduce ----------------------------------------------------------------

struct ReduceArgs {
  std::string expr;
  long long a = 0;
  long long b = 0;
  std::optional<std::string> t;
};

void flatten_cart(const Expr& e, std::vector<Graph>& out) {
  if (e.kind == ExprKind::Cart) {
    flatten_cart(e.children[0], out);
    flatten_cart(e.children[1], out);
  } else {
    out.push_back(evaluate_graph(e));
  }
}

int cmd_reduce(const Globals& gl, const ReduceArgs& args) {
  const Expr e = parse_expression(args.expr);
  const Graph whole = evaluate_graph(e);
  const VertexId a = vertex(whole, args.a, "vertex a");
  const VertexId b = vertex(whole, args.b, "vertex b");
  const QuantumWalk oracle(whole);

  std::function<std::complex<double>(double)> reduced;
  std::string kind;
  switch (e.kind) {
    case ExprKind::Join: {
      const Graph g = evaluate_graph(e.children[0]);
      if (a.index >= g.order() || b.index >= g.order()) throw UsageError("join reduction needs a and b inside G");
      auto red = std::make_shared<JoinReduction>(g, evaluate_graph(e.children[1]));
      reduced = [red, a, b](double t) { return red->amplitude(a, b, t).value; };
      kind = "join";
      break;
    }
    case ExprKind::SelfJoin: {
      const Graph g = evaluate_graph(e.children[0]);
      if (a.index >= g.order() || b.index >= g.order())
        throw UsageError("self-join reduction needs a and b inside the first copy");
      auto red = std::make_shared<SelfJoinReduction>(g, static_cast<std::size_t>(e.numbers[0]));
      reduced = [red, a, b](double t) { return red->amplitude(a, b, t).value; };
      kind = "selfjoin";
      break;
    }
    case ExprKind::CJoin: {
      // Composite indices are interleaved: (u, s) -> 2u + s.
      if (a.index % 2 != 0) throw UsageError("circulant-join reduction needs a in copy 0 (an even index)");
      const Graph g = evaluate_graph(e.children[0]);
      const auto c = std::get<CirculantSpec>(evaluate(e.children[1]));
      auto red = std::make_shared<CirculantJoinReduction>(g, c);
      const VertexId u{a.index / 2}, v{b.index / 2};
      const std::size_t copy = b.index % 2;
      reduced = [red, u, v, copy](double t) { return red->amplitude(u, copy, v, t).value; };
      kind = "cjoin";
      break;
    }
    case ExprKind::Cart: {
      std::vector<Graph> factors;
      flatten_cart(e, factors);
      std::vector<ProductFactor> parts;
      std::size_t ra = a.index, rb = b.index;
      for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        const std::size_t n = it->order();
        parts.insert(parts.begin(), ProductFactor{*it, VertexId{ra % n}, VertexId{rb % n}});
        ra /= n;
        rb /= n;
      }
      reduced = [parts](double t) { return cartesian_amplitude(parts, t).value; };
      kind = "cart";
      break;
    }
    default: throw UsageError("reduce needs a top-level join, selfjoin, cjoin or cart");
  }

  std::vector<double> times;
  if (args.t) times.push_back(parse_time(*args.t, join_delta(e)));
  else times = oracle_time_grid();

  Table t{{"t", "reduction_re", "reduction_im", "oracle_re", "oracle_im", "absdiff"}, {}};
  std::vector<std::string> items;
  double worst = 0.0;
  for (double x : times) {
    const auto r = reduced(x);
    const auto o = oracle.amplitude(a, b, x).value;
    const double diff = std::abs(r - o);
    worst = std::max(worst, diff);
    t.rows.push_back({format_double(x), format_double(r.real()), format_double(r.imag()), format_double(o.real()),
                      format_double(o.imag()), format_double(diff)});
    items.push_back(JsonObject()
                        .num("t", x)
                        .raw("reduction", JsonObject().num("re", r.real()).num("im", r.imag()).dump())
                        .raw("oracle", JsonObject().num("re", o.real()).num("im", o.imag()).dump())
                        .num("absdiff", diff)
                        .dump());
  }
  const std::string json = JsonObject()
                               .str("graph", render(e))
                               .str("reduction", kind)
                               .integer("a", static_cast<long long>(a.index))
                               .integer("b", static_cast<long long>(b.index))
                               .num("maxAbsDiff", worst)
                               .raw("samples", json_array(items))
                               .dump();
  emit_table(gl, t, json);
  if (gl.fmt() == OutputFormat::Plain) std::cout << "max absdiff: " << format_double(worst) << "\n";
  return worst <= gl.tol ? kOk : kClaimFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continuous-time quantum walks and perfect state transfer on graph expressions"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals gl;
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--tol", gl.tol, "Fidelity and oracle tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", gl.seed, "Seed for generated test corpora");

  std::string spectrum_expr;
  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues with integrality flags");
  spectrum->add_option("expr", spectrum_expr, "Graph expression")->required();

  PstArgs pst;
  auto* pst_cmd = app.add_subcommand("pst", "Check or search for perfect state transfer");
  pst_cmd->add_option("expr", pst.expr, "Graph expression")->required();
  pst_cmd->add_option("a", pst.a, "Source vertex")->required();
  pst_cmd->add_option("b", pst.b, "Target vertex (required with --t)");
  pst_cmd->add_option("--t", pst.t, "Time, e.g. pi/2, pi/sqrt2, 2pi/Delta, 1.5708");
  pst_cmd->add_option("--search", pst.search, "Search (0, tMax] over every target");
  pst_cmd->add_option("--grid", pst.grid, "Search grid size")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24));
  pst_cmd->add_flag("--expect-pst", pst.expect, "Exit 1 unless transfer is found");

  std::string filter;
  auto* verify = app.add_subcommand("verify-paper", "Run the claim regression suite");
  verify->add_option("--filter", filter, "Check name substring or tag");

  std::string export_expr, export_path;
  auto* exp = app.add_subcommand("export", "Write a graph as an edge list");
  exp->add_option("expr", export_expr, "Graph expression")->required();
  exp->add_option("path", export_path, "Output file")->required();

  ReduceArgs reduce;
  auto* red = app.add_subcommand("reduce", "Compare a closed-form reduction with the dense walk");
  red->add_option("expr", reduce.expr, "Expression whose top-level operator is join, selfjoin, cjoin or cart")
      ->required();
  red->add_option("a", reduce.a, "Source vertex")->required();
  red->add_option("b", reduce.b, "Target vertex")->required();
  red->add_option("--t", reduce.t, "Single time; default is 64 times in (0, 4pi]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*spectrum) return cmd_spectrum(gl, spectrum_expr);
    if (*pst_cmd) return cmd_pst(gl, pst);
    if (*verify) return cmd_verify(gl, filter);
    if (*exp) return cmd_export(export_expr, export_path);
    if (*red) return cmd_reduce(gl, reduce);
  } catch (const std::exception& e) {
    // Parse, domain, range and I/O failures alike; claim failures return 1 above.
    std::cerr << "qwalk: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
