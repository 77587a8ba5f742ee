#pragma once

#include <vector>

#include "signcon/core.hpp"
#include "signcon/partition.hpp"

namespace signcon {

/// Unbalanced connected components whole, and single vertices of balanced ones.
ComponentPartition sign_components(const SignedGraph& g);

/// Connected and unbalanced, or at most one vertex. The empty graph counts as
/// sign connected, since it has no pair of vertices to join.
bool is_sign_connected(const SignedGraph& g);
bool is_sign_connected(const Subgraph& h);

struct WitnessPair {
  Walk positive;
  Walk negative;
};

/// Shortest chains of each sign from x to y, read off the double cover.
/// Throws NotSignConnected when one of the signs is unreachable.
WitnessPair witness_chains(const SignedGraph& g, VertexId x, VertexId y);

/// Edges whose deletion destroys sign connection. Requires g sign connected
/// with more than one vertex.
std::vector<EdgeId> sign_isthmi(const SignedGraph& g);

/// Vertices whose deletion destroys sign connection. Requires g sign connected.
std::vector<VertexId> sign_articulation_vertices(const SignedGraph& g);

/// Requires g sign connected.
bool is_sign_block(const SignedGraph& g);

/// Classes of the "joined by a positive chain" relation.
ComponentPartition positive_components(const SignedGraph& g);

/// Classes of "joined by a negative chain, or both negatively joined to a
/// common vertex".
ComponentPartition negative_components(const SignedGraph& g);

/// Same graph with every edge negative.
SignedGraph all_negative(const SignedGraph& g);

/// Sign connection of the all-negative signature; signs of g are ignored.
bool is_parity_connected(const SignedGraph& g);

}  // namespace signcon
