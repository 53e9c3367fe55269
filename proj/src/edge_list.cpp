#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qwalk/graph.hpp"

namespace qwalk {

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = strip_comment(line);
    if (blank(body)) continue;
    std::istringstream fields(body);
    if (!n) {
      std::string tag;
      long long count = -1;
      if (!(fields >> tag >> count) || tag != "n") fail(line_no, "expected header 'n <count>'");
      if (count < 1) fail(line_no, "vertex count must be positive");
      n = static_cast<std::size_t>(count);
    } else {
      long long u = -1, v = -1;
      if (!(fields >> u >> v)) fail(line_no, "expected 'u v'");
      if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= *n || static_cast<std::size_t>(v) >= *n)
        fail(line_no, "vertex index out of range");
      if (u == v) fail(line_no, "self-loop");
      const std::pair<std::size_t, std::size_t> key = std::minmax(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
      if (!seen.insert(key).second) fail(line_no, "duplicate edge");
      edges.emplace_back(key);
    }
    std::string extra;
    if (fields >> extra) fail(line_no, "trailing tokens");
  }
  if (!n) throw std::invalid_argument("edge list is missing the 'n <count>' header");
  return Graph::from_edges(*n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace qwalk
