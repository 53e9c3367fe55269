#include "qwalk/pst.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "qwalk/kernels.hpp"

namespace qwalk {

PstAnalyzer::PstAnalyzer(const Graph& g) : graph_(g), walk_(g), diameter_(diameter(g)) {}

bool PstAnalyzer::antipodal(VertexId a, VertexId b) const {
  if (!diameter_) return false;
  return distance(graph_, a, b) == diameter_;
}

PstVerdict PstAnalyzer::check(VertexId a, VertexId b, double t, double tol) const {
  if (a == b) throw std::invalid_argument("transfer needs distinct vertices; a == b is a periodicity question");
  const double f = fidelity(a, b, t);
  return PstVerdict{f >= 1.0 - tol, a, b, t, f, antipodal(a, b)};
}

std::vector<PstVerdict> PstAnalyzer::search(VertexId a, double t_max, std::size_t grid,
                                            const SearchOptions& opts) const {
  if (grid < 2) throw std::invalid_argument("search grid needs at least two points");
  if (!graph_.contains(a)) throw std::out_of_range("vertex out of range");
  const auto times = kernels::uniform_grid(t_max, grid);
  const auto table = kernels::fidelity_scan(walk_.spectrum(), a, times);
  const double unit = 1.0 - opts.pst_tolerance;

  std::vector<PstVerdict> out;
  for (std::size_t bi = 0; bi < graph_.order(); ++bi) {
    const VertexId b{bi};
    if (b == a) continue;
    struct Candidate {
      double t;
      double f;
    };
    std::vector<Candidate> cands;

    if (opts.odd_half_pi_first) {
      for (double t = std::numbers::pi / 2; t <= t_max; t += std::numbers::pi) {
        const double f = fidelity(a, b, t);
        cands.push_back({t, f});
        if (f >= unit) break;
      }
    }

    auto f_at = [&](std::size_t i) { return table.at(bi, i); };
    std::size_t best_i = 0;
    std::vector<std::size_t> peaks;
    for (std::size_t i = 0; i < grid; ++i) {
      const double left = i == 0 ? 0.0 : f_at(i - 1);
      const double right = i + 1 == grid ? -1.0 : f_at(i + 1);
      const double f = f_at(i);
      if (f >= left && f >= right && f >= opts.refine_threshold) peaks.push_back(i);
      if (f > f_at(best_i)) best_i = i;
    }
    if (std::find(peaks.begin(), peaks.end(), best_i) == peaks.end()) peaks.push_back(best_i);

    for (std::size_t i : peaks) {
      const double lo = i == 0 ? 0.0 : times[i - 1];
      const double hi = i + 1 == grid ? t_max : times[i + 1];
      const double t = golden_section_max([&](double x) { return fidelity(a, b, x); }, lo, hi, opts.time_tolerance);
      const double f = fidelity(a, b, t);
      cands.push_back(f >= fidelity(a, b, times[i]) ? Candidate{t, f} : Candidate{times[i], fidelity(a, b, times[i])});
    }

    // Earliest perfect transfer wins; otherwise report the best maximum seen.
    const Candidate* pick = nullptr;
    for (const auto& c : cands)
      if (c.f >= unit && (!pick || c.t < pick->t)) pick = &c;
    if (!pick)
      for (const auto& c : cands)
        if (!pick || c.f > pick->f) pick = &c;
    out.push_back(check(a, b, pick->t, opts.pst_tolerance));
  }
  return out;
}

PstVerdict check_pst(const Graph& g, VertexId a, VertexId b, double t, double tol) {
  return PstAnalyzer(g).check(a, b, t, tol);
}

std::vector<PstVerdict> search_pst(const Graph& g, VertexId a, double t_max, std::size_t grid,
                                   const SearchOptions& opts) {
  return PstAnalyzer(g).search(a, t_max, grid, opts);
}

double golden_section_max(const std::function<double(double)>& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  if (lo > hi) std::swap(lo, hi);
  double c = hi - (hi - lo) * inv_phi;
  double d = lo + (hi - lo) * inv_phi;
  double fc = f(c), fd = f(d);
  while (hi - lo > tol) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - (hi - lo) * inv_phi;
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + (hi - lo) * inv_phi;
      fd = f(d);
    }
    if (c == d) break;
  }
  return fc >= fd ? c : d;
}

unsigned p_adic_valuation(unsigned long long p, unsigned long long x) {
  if (p < 2) throw std::invalid_argument("valuation base must be at least 2");
  if (x == 0) throw std::invalid_argument("valuation of zero is undefined");
  unsigned j = 0;
  while (x % p == 0) {
    x /= p;
    ++j;
  }
  return j;
}

ConeCondition disconnected_cone_condition(long long n, long long k) {
  if (n < 1 || k < 0) throw std::invalid_argument("cone condition needs n >= 1 and k >= 0");
  ConeCondition c;
  c.Delta = exact_sqrt(k * k + 8 * n);
  if (!c.Delta) {
    c.reason = "k^2 + 8n = " + std::to_string(k * k + 8 * n) + " is not a perfect square";
    return c;
  }
  const long long delta = *c.Delta;
  if (k == 0) {
    c.holds = true;
    c.clause = ConeClause::EmptyRegular;
    c.t_star = 2.0 * std::numbers::pi / static_cast<double>(delta);
    c.reason = "k = 0 with integral Delta; transfer at t = 2pi/Delta";
    return c;
  }
  if (k % 4 != 0 || delta % 4 != 0) {
    c.reason = "k and Delta must both be multiples of 4";
    return c;
  }
  const unsigned sk = two_adic_valuation(static_cast<unsigned long long>(k));
  const unsigned sd = two_adic_valuation(static_cast<unsigned long long>(delta));
  if (sk == sd) {
    c.reason = "S2(k) = S2(Delta) = " + std::to_string(sk);
    return c;
  }
  c.holds = true;
  c.clause = ConeClause::ParityValuation;
  // kt/2 and Delta t/2 become multiples of pi of opposite parity at t = 2pi / 2^min.
  c.t_star = 2.0 * std::numbers::pi / std::ldexp(1.0, static_cast<int>(std::min(sk, sd)));
  c.reason = "k, Delta = 0 mod 4 with S2(k) = " + std::to_string(sk) + " != S2(Delta) = " + std::to_string(sd);
  return c;
}

ConeCondition connected_cone_condition(long long n, long long k) {
  if (n < 1 || k < 1) throw std::invalid_argument("connected cone condition needs n >= 1 and k >= 1");
  ConeCondition c;
  const long long kt = k - 1;
  c.Delta = exact_sqrt(kt * kt + 8 * n);
  if (!c.Delta) {
    c.reason = "(k-1)^2 + 8n = " + std::to_string(kt * kt + 8 * n) + " is not a perfect square";
    return c;
  }
  if (kt % 8 != 0 || *c.Delta % 8 != 0) {
    c.reason = "k-1 and Delta must both be multiples of 8";
    return c;
  }
  c.holds = true;
  c.clause = ConeClause::ConnectedParity;
  c.t_star = std::numbers::pi / 2.0;
  c.reason = "k-1 = " + std::to_string(kt) + " and Delta = " + std::to_string(*c.Delta) + " are multiples of 8";
  return c;
}

std::string to_string(Periodicity p) {
  switch (p) {
    case Periodicity::PeriodicIntegral: return "PERIODIC_INTEGRAL";
    case Periodicity::NonperiodicMixedSpectrum: return "NONPERIODIC_MIXED_SPECTRUM";
    case Periodicity::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

PeriodicityCertificate periodicity_certificate(const Graph& g,
                                               const std::optional<std::vector<ClosedForm>>& closed_forms) {
  constexpr double tol = 1e-9;
  const auto numeric = decompose(g).eigenvalues;
  PeriodicityCertificate cert;

  if (closed_forms) {
    if (closed_forms->size() != numeric.size())
      throw std::invalid_argument("closed-form spectrum has the wrong number of eigenvalues");
    std::vector<double> symbolic;
    for (const auto& f : *closed_forms) symbolic.push_back(f.value());
    std::sort(symbolic.begin(), symbolic.end());
    for (std::size_t i = 0; i < numeric.size(); ++i)
      if (std::abs(symbolic[i] - numeric[i]) > tol)
        throw std::invalid_argument("closed-form spectrum does not match the computed spectrum");

    std::set<long long> integers;
    std::set<std::string> irrationals;
    bool all_integer = true;
    for (const auto& f : *closed_forms) {
      switch (classify(f)) {
        case Rationality::Integer: integers.insert(*exact_integer(f)); break;
        case Rationality::Irrational:
          irrationals.insert(f.describe());
          all_integer = false;
          break;
        default: all_integer = false; break;
      }
    }
    cert.integer_evidence.assign(integers.begin(), integers.end());
    cert.irrational_evidence.assign(irrationals.begin(), irrationals.end());
    if (!integers.empty() && !irrationals.empty()) {
      cert.verdict = Periodicity::NonperiodicMixedSpectrum;
      cert.note = "integer and irrational eigenvalues coexist (irrationality certified by Niven's theorem or a non-square radicand)";
      return cert;
    }
    if (all_integer) {
      cert.verdict = Periodicity::PeriodicIntegral;
      cert.note = "closed forms are all integers";
      return cert;
    }
  }

  std::set<long long> integers;
  for (double x : numeric) {
    if (std::abs(x - std::round(x)) > tol) {
      cert.verdict = Periodicity::Inconclusive;
      cert.integer_evidence.clear();
      cert.note = closed_forms ? "closed forms do not certify a mixed spectrum"
                               : "spectrum is not integral and no closed form was supplied";
      return cert;
    }
    integers.insert(std::llround(x));
  }
  cert.verdict = Periodicity::PeriodicIntegral;
  cert.integer_evidence.assign(integers.begin(), integers.end());
  cert.note = "every eigenvalue is within 1e-9 of an integer";
  return cert;
}

}  // namespace qwalk
