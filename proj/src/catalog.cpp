#include "qwalk/catalog.hpp"

namespace qwalk {

namespace {

CatalogEntry pst(std::string id, std::string expr, std::size_t a, std::size_t b, std::string time, std::string source,
                 std::vector<std::string> tags, std::optional<bool> antipodal = std::nullopt) {
  return CatalogEntry{std::move(id), std::move(expr), a, b, std::move(time), std::move(source), true, antipodal,
                      std::move(tags)};
}

CatalogEntry negative(std::string id, std::string expr, std::string source) {
  return CatalogEntry{std::move(id), std::move(expr), 0, std::nullopt, "4pi", std::move(source), false, std::nullopt,
                      {"negative"}};
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> c;
  c.push_back(pst("icg8-1-2", "icg:8:1,2", 0, 4, "pi/2", "icg-pst", {"icg"}, true));
  c.push_back(pst("icg8-1-4", "icg:8:1,4", 0, 4, "pi/2", "icg-pst", {"icg"}, false));
  c.push_back(pst("icg16-1-2-4", "icg:16:1,2,4", 0, 8, "pi/2", "icg-doubled", {"icg"}));
  c.push_back(pst("icg16-1-2-8", "icg:16:1,2,8", 0, 8, "pi/2", "icg-doubled", {"icg"}));

  // Nontrivial circulant joins of ICG_24(D); composite index 24 is vertex 12 of copy 0.
  for (const char* d : {"1,6", "1,12"})
    for (const char* q : {"1", "3", "1,3"}) {
      std::string id = std::string("cjoin24-D") + d + "-Q" + q;
      for (char& ch : id)
        if (ch == ',') ch = '.';
      c.push_back(pst(id, std::string("cjoin(icg:24:") + d + ",conn:24:" + q + ")", 0, 24, "pi/2", "connector-join",
                      {"connector", "cjoin"}));
    }

  c.push_back(pst("bunkbed-icg8-1-4", "cjoin(icg:8:1,4,shift:8:0)", 0, 9, "pi/2", "bunkbed", {"bunkbed", "cjoin"}));
  c.push_back(pst("bunkbed-icg16-1-2-8", "cjoin(icg:16:1,2,8,shift:16:0)", 0, 17, "pi/2", "bunkbed",
                  {"bunkbed", "cjoin"}));
  c.push_back(pst("selfjoin-via-ones-icg8-1-4", "cjoin(icg:8:1,4,ones:8)", 0, 8, "pi/2", "join-with-itself", {"ones", "cjoin"}));
  // (b, 1) with b moved by the permutation: 4 + 3 = 7, interleaved index 2*7 + 1.
  c.push_back(pst("shift3-icg8-1-4", "cjoin(icg:8:1,4,shift:8:3)", 0, 15, "pi/2", "permutation-join", {"permutation", "cjoin"}));

  c.push_back(pst("hypercube-q3", "cart(complete:2,cart(complete:2,complete:2))", 0, 7, "pi/2", "hypercube",
                  {"product"}, true));
  c.push_back(pst("p3-square", "cart(path:3,path:3)", 0, 8, "pi/sqrt2", "cartesian-product", {"product"}, true));
  c.push_back(pst("icg8-product", "cart(icg:8:1,4,icg:8:1,2)", 0, 36, "pi/2", "cartesian-product", {"product"}));

  c.push_back(pst("selfjoin3-icg8-1-4", "selfjoin(icg:8:1,4,3)", 0, 4, "pi/2", "self-join", {"selfjoin"}));
  c.push_back(pst("selfjoin3-icg16-2-8-1", "selfjoin(icg:16:1,2,8,3)", 0, 8, "pi/2", "self-join", {"selfjoin"}));
  c.push_back(pst("selfjoin3-q2", "selfjoin(cycle:4,3)", 0, 2, "pi/2", "self-join", {"selfjoin"}));

  c.push_back(pst("octahedron", "join(empty:2,icg:6:1,2)", 0, 1, "pi/2", "double-cone", {"cone"}));
  c.push_back(pst("cone-empty-empty", "join(empty:2,empty:2)", 0, 1, "2pi/Delta", "double-cone", {"cone"}));
  c.push_back(pst("cone-grid-l2", "join(empty:2,cart(cycle:6,cycle:5))", 0, 1, "pi/2", "nonperiodic-cone", {"cone", "nonperiodic"}));
  c.push_back(pst("cone-grid-l3", "join(empty:2,cart(cycle:10,cycle:7))", 0, 1, "pi/2", "nonperiodic-cone", {"cone", "nonperiodic"}));
  c.push_back(pst("connected-cone-icg24", "join(complete:2,icg:24:1,12)", 0, 1, "pi/2", "connected-cone", {"cone"}));

  c.push_back(pst("k2", "complete:2", 0, 1, "pi/2", "small-graph", {"small"}, true));
  c.push_back(pst("c4", "cycle:4", 0, 2, "pi/2", "small-graph", {"small"}, true));
  c.push_back(pst("p3", "path:3", 0, 2, "pi/sqrt2", "small-graph", {"small"}, true));

  c.push_back(negative("no-pst-k3", "complete:3", "unitary-cayley"));
  c.push_back(negative("no-pst-c5", "cycle:5", "unitary-cayley"));
  c.push_back(negative("no-pst-c6", "cycle:6", "unitary-cayley"));
  c.push_back(negative("no-pst-k5", "icg:5:1", "unitary-cayley"));
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& family_catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

}  // namespace qwalk
