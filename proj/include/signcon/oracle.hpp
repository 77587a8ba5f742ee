#pragma once

// Brute-force reference computations for cross-checking. Everything here
// works from the raw edge list only and is exponential on purpose.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "signcon/core.hpp"

namespace signcon::oracle {

struct EnumerationBudget {
  std::size_t max_cycles = 100000;
  std::size_t max_chain_length = 6;
  std::size_t max_subsets = std::size_t{1} << 22;
  std::size_t max_walks = 1000000;
};

struct SignedEdgeSet {
  std::vector<EdgeId> edges;  // sorted
  Sign sign = Sign::Positive;
  bool operator==(const SignedEdgeSet&) const = default;
};

/// Every edge subset that is connected with all degrees 2, ordered by edge list.
std::vector<SignedEdgeSet> enumerate_elementary_cycles(const SignedGraph& g,
                                                       const EnumerationBudget& budget = {});

struct ChainSet {
  std::vector<Walk> positive;
  std::vector<Walk> negative;
};

/// Every walk from x to y of length at most budget.max_chain_length.
ChainSet enumerate_chains(const SignedGraph& g, VertexId x, VertexId y,
                          const EnumerationBudget& budget = {});

/// Signs of walks from x to each vertex, by dynamic programming over walk
/// length up to 2n.
std::vector<SignSet> reachable_signs(const SignedGraph& g, VertexId x);

using Circuit = std::vector<EdgeId>;

std::vector<Circuit> enumerate_frame_circuits(const SignedGraph& g,
                                              const EnumerationBudget& budget = {});
std::vector<Circuit> enumerate_lift_circuits(const SignedGraph& g,
                                             const EnumerationBudget& budget = {});

/// Size of a largest subset of F containing no circuit.
int rank_from_circuits(std::span<const Circuit> circuits, std::span<const EdgeId> F,
                       const EnumerationBudget& budget = {});

/// Circuit-defined rank of every edge subset of a graph with m edges,
/// indexed by bitmask.
std::vector<int> circuit_rank_table(std::span<const Circuit> circuits, int m,
                                    const EnumerationBudget& budget = {});

/// Classes of the "lie in a common circuit" closure. Edges in no circuit
/// are singletons.
std::vector<std::vector<EdgeId>> circuit_components(std::span<const Circuit> circuits, int m);

/// Vertex classes of a graph's connected components, by union-find.
std::vector<std::vector<VertexId>> connected_classes(const SignedGraph& g);

/// No negative cycle among the enumerated cycles.
bool balanced(const SignedGraph& g, const EnumerationBudget& budget = {});

/// Two-colouring of the underlying graph, loops included.
bool bipartite(const SignedGraph& g);

struct RelationClasses {
  std::vector<std::vector<VertexId>> classes;
  /// The relation already holds between every two members of a class.
  bool pairwise = true;
};

/// Closure of "joined by a positive walk".
RelationClasses positive_relation(const SignedGraph& g);
/// Closure of "joined by a negative walk, or both negatively joined to a
/// common vertex".
RelationClasses negative_relation(const SignedGraph& g);
/// Closure of "joined by walks of both signs", each vertex related to itself.
RelationClasses sign_relation(const SignedGraph& g);

struct Elementarity {
  /// No walk between the same ends with the same sign uses a proper subset
  /// of the edges.
  bool minimal_edges = false;
  /// No walk of that sign over exactly the same edges is shorter.
  bool minimal_length = false;
  bool elementary() const noexcept { return minimal_edges && minimal_length; }
};

/// Search over (vertex, used edges, sign) states restricted to the walk's edges.
Elementarity elementarity(const SignedGraph& g, const Walk& w, const EnumerationBudget& budget = {});

}  // namespace signcon::oracle
