#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qwalk {

/// One registered transfer claim, runnable end to end from its expression.
struct CatalogEntry {
  std::string id;
  std::string expression;
  std::size_t a = 0;
  std::optional<std::size_t> b;  // unset for negative controls: every target is searched
  std::string time;              // transfer time, or the search horizon when b is unset
  std::string source;            // claim family, e.g. "double-cone"
  bool expect_pst = true;
  std::optional<bool> expect_antipodal;
  std::vector<std::string> tags;
};

/// Grid size used when a negative control is searched.
inline constexpr std::size_t kNegativeSearchGrid = 4096;

const std::vector<CatalogEntry>& family_catalog();

}  // namespace qwalk
