#pragma once

// Regression runner behind `qwalk verify-paper`: every catalog entry, the
// connector identities, the reduction-versus-dense-walk suites, the n = 8
// connector scan and the mixed-spectrum certificate.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace qwalk {

struct CheckResult {
  std::string name;
  std::string source;
  std::vector<std::string> tags;
  bool passed = false;
  double fidelity = std::numeric_limits<double>::quiet_NaN();
  double max_absdiff = std::numeric_limits<double>::quiet_NaN();
  std::string detail;
};

struct VerifyOptions {
  std::string filter;  // case-insensitive substring of the name, or an exact tag; empty selects all
  double tol = 1e-9;
  std::uint64_t seed = 1;
};

/// Names and tags of every registered check, in report order.
std::vector<CheckResult> list_checks();

/// Runs the selected checks concurrently; results come back in registry order.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

/// 64 uniformly spaced times in (0, 4 pi].
std::vector<double> oracle_time_grid();

}  // namespace qwalk
