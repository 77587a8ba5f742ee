#pragma once

#include <array>
#include <string>
#include <optional>
#include <span>
#include <vector>

#include "signcon/core.hpp"
#include "signcon/partition.hpp"

namespace signcon {

/// A maximal subgraph without articulation vertex. Each loop is a block of
/// its own and a vertex with no incident edge is an edgeless block.
struct Block {
  std::vector<EdgeId> edges;       // sorted
  std::vector<VertexId> vertices;  // sorted
  int component = 0;               // connected component label
  bool balanced = true;
  /// Unbalanced, or on a path between two unbalanced blocks.
  bool inner = false;

  bool is_loop() const noexcept { return edges.size() == 1 && vertices.size() == 1; }
};

using Necklace = std::vector<std::vector<EdgeId>>;

/// Union of the inner blocks of one unbalanced connected component.
struct Core {
  int component = 0;
  std::vector<int> blocks;         // indices into BlockDecomposition::blocks
  std::vector<EdgeId> edges;       // sorted
  std::optional<Necklace> necklace;  // set when the core is an unbalanced necklace
};

struct BlockDecomposition {
  std::vector<Block> blocks;  // edged blocks by smallest edge id, then edgeless ones
  std::vector<VertexId> articulation_vertices;
  std::vector<Core> cores;

  /// Index of the block holding edge e.
  int block_of_edge(EdgeId e) const;
};

BlockDecomposition block_decomposition(const SignedGraph& g);

/// Vertices lying in two or more blocks. A vertex carrying a loop and some
/// other edge is one.
std::vector<VertexId> articulation_vertices(const SignedGraph& g);

/// Non-loop edges whose deletion increases the number of components.
std::vector<EdgeId> isthmi(const SignedGraph& g);

/// Constituents, in cyclic order, of an unbalanced necklace of balanced
/// blocks; nullopt when the block is not one. Every unbalanced cycle of
/// length at least 2 is a necklace of its single edges. Throws NotABlock
/// when `block` is not the edge set of a block of g.
std::optional<Necklace> detect_necklace(const SignedGraph& g, std::span<const EdgeId> block);

/// Every block is a cycle (a loop included), a single edge, or K1.
bool is_cactus_forest(const SignedGraph& g);

/// No positive cycle: a cactus forest whose cycles are all negative.
bool is_contrabalanced(const SignedGraph& g);

/// Three internally disjoint chains joining `a` and `b`, each listed from a.
struct Theta {
  VertexId a = 0;
  VertexId b = 0;
  std::array<std::vector<EdgeId>, 3> chains;
};

std::optional<Theta> contains_theta(const SignedGraph& g);

enum class HypercyclicType { DisjointArms, SharedArm, NotHypercyclic };

/// Shape of a hypercyclic chain: one negative cycle, arm A from the start x
/// and arm B from the end y, both meeting the cycle at `attachment`.
/// `shared` is the common terminal segment of the arms, from its first
/// vertex to the attachment.
struct HypercyclicVerdict {
  HypercyclicType type = HypercyclicType::NotHypercyclic;
  std::vector<EdgeId> cycle;
  std::vector<EdgeId> arm_x;
  std::vector<EdgeId> arm_y;
  std::vector<EdgeId> shared;
  VertexId attachment = -1;
  std::string reason;  // why the walk is rejected
};

/// Throws InvalidWalk.
HypercyclicVerdict classify_hypercyclic(const SignedGraph& g, const Walk& w);

}  // namespace signcon
