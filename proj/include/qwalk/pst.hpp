#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qwalk/closed_form.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

/// Default gap below unit fidelity still counted as perfect transfer.
inline constexpr double kPstTolerance = 1e-9;

struct PstVerdict {
  bool found = false;
  VertexId a;
  VertexId b;
  double t_star = 0.0;
  double fidelity = 0.0;
  bool antipodal = false;
};

struct SearchOptions {
  double refine_threshold = 0.999;  // coarse maxima above this get refined
  double time_tolerance = 1e-12;    // golden-section bracket width
  double pst_tolerance = kPstTolerance;
  bool odd_half_pi_first = true;    // try t = (2k+1) pi/2 before the grid
};

/// Caches the walk and the distance data of one graph.
class PstAnalyzer {
 public:
  explicit PstAnalyzer(const Graph& g);

  /// Throws std::invalid_argument when a == b.
  PstVerdict check(VertexId a, VertexId b, double t, double tol = kPstTolerance) const;

  /// One verdict per target b != a, in vertex order.
  std::vector<PstVerdict> search(VertexId a, double t_max, std::size_t grid, const SearchOptions& opts = {}) const;

  bool antipodal(VertexId a, VertexId b) const;
  const QuantumWalk& walk() const { return walk_; }

 private:
  double fidelity(VertexId a, VertexId b, double t) const { return walk_.amplitude(a, b, t).magnitude(); }

  Graph graph_;
  QuantumWalk walk_;
  std::optional<std::size_t> diameter_;
};

PstVerdict check_pst(const Graph& g, VertexId a, VertexId b, double t, double tol = kPstTolerance);
std::vector<PstVerdict> search_pst(const Graph& g, VertexId a, double t_max, std::size_t grid,
                                   const SearchOptions& opts = {});

/// Golden-section maximisation of f on [lo, hi]; returns the argmax.
double golden_section_max(const std::function<double(double)>& f, double lo, double hi, double tol);

/// Largest j with p^j | x. Throws for x == 0 or p < 2.
unsigned p_adic_valuation(unsigned long long p, unsigned long long x);
inline unsigned two_adic_valuation(unsigned long long x) { return p_adic_valuation(2, x); }

enum class ConeClause { None, EmptyRegular, ParityValuation, ConnectedParity };

struct ConeCondition {
  bool holds = false;
  std::optional<long long> Delta;
  ConeClause clause = ConeClause::None;
  std::string reason;
  std::optional<double> t_star;  // a transfer time implied by the condition
};

/// Empty two-vertex apex joined with an n-vertex k-regular graph.
ConeCondition disconnected_cone_condition(long long n, long long k);
/// K_2 apex joined with an n-vertex k-regular graph (k >= 1).
ConeCondition connected_cone_condition(long long n, long long k);

enum class Periodicity { PeriodicIntegral, NonperiodicMixedSpectrum, Inconclusive };
std::string to_string(Periodicity p);

struct PeriodicityCertificate {
  Periodicity verdict = Periodicity::Inconclusive;
  std::vector<long long> integer_evidence;        // distinct certified integers
  std::vector<std::string> irrational_evidence;   // closed forms certified irrational
  std::string note;
};

/// Periodic when every eigenvalue is within 1e-9 of an integer; non-periodic
/// when the supplied closed forms (which must match the numeric spectrum)
/// certify both an integer and an irrational eigenvalue; inconclusive otherwise.
PeriodicityCertificate periodicity_certificate(const Graph& g,
                                               const std::optional<std::vector<ClosedForm>>& closed_forms);

}  // namespace qwalk
