#pragma once

#include <vector>

#include "signcon/graph_io.hpp"

namespace signcon::test {

inline std::vector<EdgeId> all_edges(const SignedGraph& g) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) out.push_back(e);
  return out;
}

using Classes = std::vector<std::vector<int>>;

}  // namespace signcon::test
