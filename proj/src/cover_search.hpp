#pragma once

#include <vector>

#include "signcon/core.hpp"

namespace signcon::detail {

/// Breadth-first search of the signed double cover restricted to `h`,
/// starting from (root, +). States are indexed as in DoubleCover.
struct CoverSearch {
  std::vector<int> parent_state;     // -1 at the root and on unreached states
  std::vector<EdgeId> parent_edge;   // base edge used to enter the state
  std::vector<bool> reached;

  bool reached_at(VertexId v, Sign s) const { return reached[DoubleCover::index_of(v, s)]; }
};

CoverSearch search_cover(const Subgraph& h, VertexId root);

/// Shortest walk to (target, s) recovered from the search tree.
Walk cover_path(const SignedGraph& g, const CoverSearch& search, VertexId root,
                VertexId target, Sign s);

}  // namespace signcon::detail
