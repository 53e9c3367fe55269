#include "qwalk/verify.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "qwalk/catalog.hpp"
#include "qwalk/expr.hpp"
#include "qwalk/kernels.hpp"
#include "qwalk/operators.hpp"
#include "qwalk/pst.hpp"
#include "qwalk/reductions.hpp"
#include "qwalk/time_expr.hpp"

namespace qwalk {

namespace {

struct Check {
  CheckResult head;
  std::function<void(CheckResult&, const VerifyOptions&)> run;
};

CheckResult head(std::string name, std::string source, std::vector<std::string> tags) {
  CheckResult r;
  r.name = std::move(name);
  r.source = std::move(source);
  r.tags = std::move(tags);
  return r;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

bool selected(const CheckResult& r, const std::string& filter) {
  if (filter.empty()) return true;
  const std::string f = lower(filter);
  if (lower(r.name).find(f) != std::string::npos) return true;
  if (lower(r.source) == f) return true;
  return std::any_of(r.tags.begin(), r.tags.end(), [&](const std::string& t) { return lower(t) == f; });
}

void run_catalog_entry(const CatalogEntry& e, CheckResult& r, const VerifyOptions& opts) {
  const Expr expr = parse_expression(e.expression);
  const Graph g = evaluate_graph(expr);
  std::optional<double> delta;
  if (auto d = top_level_join_data(expr)) delta = d->Delta;
  const double t = parse_time(e.time, delta);
  const PstAnalyzer analyzer(g);

  if (e.b) {
    const PstVerdict v = analyzer.check(VertexId{e.a}, VertexId{*e.b}, t, opts.tol);
    r.fidelity = v.fidelity;
    r.passed = v.found == e.expect_pst;
    if (e.expect_antipodal && v.antipodal != *e.expect_antipodal) r.passed = false;
    r.detail = e.expression + " " + std::to_string(e.a) + "->" + std::to_string(*e.b) + " @ " + e.time +
               (v.antipodal ? " (antipodal)" : " (non-antipodal)");
    return;
  }

  SearchOptions so;
  so.pst_tolerance = opts.tol;
  const auto verdicts = analyzer.search(VertexId{e.a}, t, kNegativeSearchGrid, so);
  double best = 0.0;
  std::size_t arg = 0;
  for (const auto& v : verdicts)
    if (v.fidelity > best) {
      best = v.fidelity;
      arg = v.b.index;
    }
  r.fidelity = best;
  r.passed = best < 0.999;
  r.detail = e.expression + " best fidelity from " + std::to_string(e.a) + " is at " + std::to_string(arg) +
             " over (0, " + e.time + "]";
}

// ---- reduction suites ------------------------------------------------------

std::vector<std::pair<std::string, std::string>> join_pairs() {
  return {{"cycle:4", "cycle:5"},       {"cycle:3", "cycle:3"},     {"cycle:6", "complete:4"},
          {"complete:2", "cycle:7"},    {"empty:2", "cycle:6"},     {"empty:1", "complete:3"},
          {"empty:3", "empty:2"},       {"icg:8:1,4", "cycle:5"},   {"icg:8:1,2", "empty:2"},
          {"icg:6:1,2", "empty:2"},     {"complete:5", "icg:9:3"},  {"icg:12:1,6", "complete:2"},
          {"cycle:8", "icg:8:1,4"},     {"complete:3", "empty:4"},  {"icg:10:2", "cycle:4"},
          {"cart(cycle:3,cycle:4)", "empty:2"}, {"icg:16:1,2,8", "icg:8:1,2"}, {"empty:2", "icg:24:1,12"},
          {"complete:2", "icg:24:1,12"}, {"cycle:5", "complete:1"}, {"icg:9:1,3", "cycle:9"},
          {"complete:6", "complete:6"}};
}

std::vector<std::string> selfjoin_bases() {
  return {"cycle:4",   "cycle:5",    "cycle:6",     "complete:3", "empty:3",    "icg:8:1,4",
          "icg:8:1,2", "icg:6:1,2",  "icg:12:1,6",  "cart(complete:2,complete:2)", "icg:16:1,2,8"};
}

double join_suite_case(const std::string& gx, const std::string& hx, std::mt19937_64& rng) {
  const Graph g = evaluate_graph(gx), h = evaluate_graph(hx);
  const JoinReduction red(g, h);
  const QuantumWalk dense(join(g, h));
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  const VertexId a{pick(rng)}, b{pick(rng)};
  double worst = 0.0;
  for (double t : oracle_time_grid())
    worst = std::max(worst, std::abs(red.amplitude(a, b, t).value - dense.amplitude(a, b, t).value));
  return worst;
}

double selfjoin_suite_case(const std::string& gx, std::size_t copies, std::mt19937_64& rng) {
  const Graph g = evaluate_graph(gx);
  const SelfJoinReduction red(g, copies);
  const QuantumWalk dense(self_join(g, copies));
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  const VertexId a{pick(rng)}, b{pick(rng)};
  double worst = 0.0;
  for (double t : oracle_time_grid())
    worst = std::max(worst, std::abs(red.amplitude(a, b, t).value - dense.amplitude(a, b, t).value));
  return worst;
}

std::vector<CirculantSpec> suite_connectors(std::size_t n) {
  std::vector<CirculantSpec> out{identity_spec(n), all_ones_spec(n), circulant_permutation(n, 1),
                                 circulant_permutation(n, n / 2 - 1)};
  const auto split = split_two_adic(n);
  if (split.u >= 3 && split.m >= 3)
    for (std::size_t q : all_divisors(split.m)) out.push_back(connector(n, DivisorSet{q}));
  return out;
}

double cjoin_suite_case(const Graph& g, const CirculantSpec& c, std::mt19937_64& rng) {
  const CirculantJoinReduction red(g, c);
  const QuantumWalk dense(circulant_join(g, c, JoinLayout::Block));
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  const VertexId a{pick(rng)}, b{pick(rng)};
  double worst = 0.0;
  for (std::size_t s = 0; s < 2; ++s)
    for (double t : oracle_time_grid()) {
      const Amplitude r = red.amplitude(a, s, b, t);
      worst = std::max(worst, std::abs(r.value - dense.amplitude(r.a, r.b, t).value));
    }
  return worst;
}

double product_suite_case(const std::vector<std::string>& factors, const std::vector<std::size_t>& a,
                          const std::vector<std::size_t>& b) {
  std::vector<ProductFactor> parts;
  std::vector<std::size_t> orders;
  Graph whole = evaluate_graph(factors.front());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    Graph f = evaluate_graph(factors[i]);
    if (i) whole = cartesian(whole, f);
    orders.push_back(f.order());
    parts.push_back({std::move(f), VertexId{a[i]}, VertexId{b[i]}});
  }
  const QuantumWalk dense(whole);
  const VertexId ia{product_index(orders, a)}, ib{product_index(orders, b)};
  double worst = 0.0;
  for (double t : oracle_time_grid())
    worst = std::max(worst, std::abs(cartesian_amplitude(parts, t).value - dense.amplitude(ia, ib, t).value));
  return worst;
}

std::string names(const CirculantSpec& c) {
  if (c == identity_spec(c.order())) return "I";
  if (c == all_ones_spec(c.order())) return "J";
  if (c == zero_spec(c.order())) return "O";
  std::string s;
  for (auto x : c.row) s += x ? '1' : '0';
  return s;
}

std::vector<Check> registry() {
  std::vector<Check> checks;

  for (const auto& e : family_catalog()) {
    checks.push_back({head(e.id, e.source, e.tags), [e](CheckResult& r, const VerifyOptions& o) { run_catalog_entry(e, r, o); }});
  }

  for (const char* d : {"1,6", "1,12"})
    for (const char* q : {"1", "3", "1,3"}) {
      std::string name = std::string("connector-identity-D") + d + "-Q" + q;
      std::replace(name.begin(), name.end(), ',', '.');
      const std::string dd = d, qq = q;
      checks.push_back({head(name, "connector-join", {"connector", "identity"}), [dd, qq](CheckResult& r, const VerifyOptions& o) {
                          const Expr de = parse_expression("icg:24:" + dd);
                          const Expr qe = parse_expression("conn:24:" + qq);
                          DivisorSet target;
                          for (std::size_t i = 1; i < de.numbers.size(); ++i)
                            target.insert(2 * static_cast<std::size_t>(de.numbers[i]));
                          DivisorSet qset;
                          for (std::size_t i = 1; i < qe.numbers.size(); ++i) {
                            target.insert(static_cast<std::size_t>(qe.numbers[i]));
                            qset.insert(static_cast<std::size_t>(qe.numbers[i]));
                          }
                          const Graph built = evaluate_graph("cjoin(icg:24:" + dd + ",conn:24:" + qq + ")");
                          const bool same = built == icg(48, target);
                          const bool eig = connector_eigenvalue_check(24, qset, o.tol);
                          r.passed = same && eig;
                          std::string t;
                          for (auto x : target) t += (t.empty() ? "" : ",") + std::to_string(x);
                          r.detail = std::string("interleaved join ") + (same ? "==" : "!=") + " icg:48:" + t +
                                     "; connector spectrum " + (eig ? "in" : "not in") + " 8Z";
                        }});
    }

  checks.push_back({head("join-reduction-vs-dense", "join", {"join", "oracle"}), [](CheckResult& r, const VerifyOptions& o) {
                      std::mt19937_64 rng(o.seed);
                      double worst = 0.0;
                      const auto pairs = join_pairs();
                      for (const auto& [g, h] : pairs) worst = std::max(worst, join_suite_case(g, h, rng));
                      r.max_absdiff = worst;
                      r.passed = worst <= o.tol;
                      r.detail = std::to_string(pairs.size()) + " regular operand pairs, 64 times in (0, 4pi]";
                    }});

  checks.push_back({head("selfjoin-reduction-vs-dense", "self-join", {"selfjoin", "oracle"}),
                    [](CheckResult& r, const VerifyOptions& o) {
                      std::mt19937_64 rng(o.seed);
                      double worst = 0.0;
                      const auto bases = selfjoin_bases();
                      for (const auto& g : bases)
                        for (std::size_t m = 1; m <= 3; ++m) worst = std::max(worst, selfjoin_suite_case(g, m, rng));
                      r.max_absdiff = worst;
                      r.passed = worst <= o.tol;
                      r.detail = std::to_string(bases.size()) + " regular graphs, m in {1,2,3}";
                    }});

  checks.push_back({head("cjoin-reduction-vs-dense", "circulant-join", {"cjoin", "connector", "oracle"}),
                    [](CheckResult& r, const VerifyOptions& o) {
                      std::mt19937_64 rng(o.seed);
                      double worst = 0.0;
                      std::size_t cases = 0;
                      for (const char* gx : {"icg:8:1,4", "icg:8:1,2", "icg:16:1,2,8", "icg:24:1,6", "icg:24:1,12"}) {
                        const Graph g = evaluate_graph(gx);
                        for (const auto& c : suite_connectors(g.order())) {
                          worst = std::max(worst, cjoin_suite_case(g, c, rng));
                          ++cases;
                        }
                      }
                      r.max_absdiff = worst;
                      r.passed = worst <= o.tol;
                      r.detail = std::to_string(cases) + " (graph, connector) cases, both target copies";
                    }});

  checks.push_back({head("product-factorization-vs-dense", "cartesian-product", {"product", "oracle"}),
                    [](CheckResult& r, const VerifyOptions& o) {
                      double worst = 0.0;
                      worst = std::max(worst, product_suite_case({"complete:2", "complete:2", "complete:2"}, {0, 0, 0},
                                                                 {1, 1, 1}));
                      worst = std::max(worst, product_suite_case({"path:3", "path:3"}, {0, 0}, {2, 2}));
                      worst = std::max(worst, product_suite_case({"icg:8:1,4", "cycle:5"}, {0, 1}, {4, 3}));
                      worst = std::max(worst, product_suite_case({"cycle:3", "path:4", "complete:2"}, {2, 0, 1},
                                                                 {0, 3, 0}));
                      r.max_absdiff = worst;
                      r.passed = worst <= o.tol;
                      r.detail = "products of 2 and 3 factors";
                    }});

  checks.push_back({head("power-of-two-connector-integrality-scan", "circulant-join", {"cjoin", "scan"}),
                    [](CheckResult& r, const VerifyOptions&) {
                      const Graph g = icg(8, {1, 4});
                      std::vector<std::string> integral;
                      std::size_t palindromes = 0, circulant_palindromes = 0;
                      for (unsigned mask = 0; mask < 256; ++mask) {
                        std::vector<std::uint8_t> row(8);
                        for (unsigned j = 0; j < 8; ++j) row[j] = (mask >> j) & 1U;
                        const CirculantSpec c(row);
                        const Graph joined = circulant_join(g, c, JoinLayout::Interleaved);
                        const auto spec = circulant_row(joined);
                        if (is_palindrome(c)) {
                          ++palindromes;
                          if (spec) ++circulant_palindromes;
                        }
                        if (spec && integrality_decomposition(*spec)) integral.push_back(names(c));
                      }
                      r.passed = std::all_of(integral.begin(), integral.end(), [](const std::string& s) {
                        return s == "I" || s == "J" || s == "O";
                      });
                      std::string list;
                      for (const auto& s : integral) list += (list.empty() ? "" : ",") + s;
                      r.detail = std::to_string(circulant_palindromes) + "/" + std::to_string(palindromes) +
                                 " palindromes give circulants; integral circulants only for {" + list + "}";
                    }});

  checks.push_back({head("mixed-spectrum-certificate", "nonperiodic-cone", {"cone", "nonperiodic", "periodicity"}),
                    [](CheckResult& r, const VerifyOptions&) {
                      const Expr e = parse_expression("join(empty:2,cart(cycle:6,cycle:5))");
                      const auto cert = periodicity_certificate(evaluate_graph(e), symbolic_spectrum(e));
                      const auto& ev = cert.integer_evidence;
                      const bool has = std::find(ev.begin(), ev.end(), 10) != ev.end() &&
                                       std::find(ev.begin(), ev.end(), -6) != ev.end();
                      r.passed = cert.verdict == Periodicity::NonperiodicMixedSpectrum && has;
                      r.detail = to_string(cert.verdict) + " with " + std::to_string(cert.irrational_evidence.size()) +
                                 " certified irrational eigenvalue forms";
                    }});
  return checks;
}

}  // namespace

std::vector<double> oracle_time_grid() { return kernels::uniform_grid(4.0 * std::numbers::pi, 64); }

std::vector<CheckResult> list_checks() {
  std::vector<CheckResult> out;
  for (auto& c : registry()) out.push_back(c.head);
  return out;
}

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  std::vector<Check> checks;
  for (auto& c : registry())
    if (selected(c.head, opts.filter)) checks.push_back(std::move(c));

  std::vector<CheckResult> results(checks.size());
  const auto count = static_cast<long>(checks.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    CheckResult r = checks[static_cast<std::size_t>(i)].head;
    try {
      checks[static_cast<std::size_t>(i)].run(r, opts);
    } catch (const std::exception& ex) {
      r.passed = false;
      r.detail = std::string("error: ") + ex.what();
    }
    results[static_cast<std::size_t>(i)] = std::move(r);
  }
  return results;
}

}  // namespace qwalk
