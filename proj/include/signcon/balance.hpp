#pragma once

#include <array>
#include <optional>
#include <vector>

#include "signcon/core.hpp"
#include "signcon/cycles.hpp"

namespace signcon {

/// True iff every cycle is positive.
bool is_balanced(const SignedGraph& g);

/// Harary bipartition of a balanced graph. In each connected component the
/// switched side is the one not containing the component's smallest vertex.
struct HararyBipartition {
  struct Part {
    std::vector<VertexId> component;
    std::vector<VertexId> switched;
    bool operator==(const Part&) const = default;
  };
  std::vector<Part> parts;

  /// Union of the switched sides; switching by it makes every edge positive.
  std::vector<VertexId> switching_set() const;
  bool operator==(const HararyBipartition&) const = default;
};

/// nullopt when g is unbalanced.
std::optional<HararyBipartition> harary_bipartition(const SignedGraph& g);

/// Edges of unbalanced components whose deletion balances that component.
std::vector<EdgeId> balancing_edges(const SignedGraph& g);

/// The five characterizations of a balancing edge, each evaluated on its own.
struct BalancingEdgeConditions {
  bool deletion_balances = false;        // (1)
  bool in_every_negative_cycle = false;  // (2)
  bool negative_only = false;            // (3) every negative cycle, no positive cycle
  bool chain_sign_differs = false;       // (4)
  bool switches_to_lone_negative = false;  // (5)

  std::array<bool, 5> values() const {
    return {deletion_balances, in_every_negative_cycle, negative_only, chain_sign_differs,
            switches_to_lone_negative};
  }
  bool all_equal() const;
};

/// Requires g connected and unbalanced; throws PreconditionError otherwise.
BalancingEdgeConditions check_balancing_edge_equivalences(
    const SignedGraph& g, EdgeId e, std::size_t max_cycles = kDefaultCycleCap);

/// Vertices of unbalanced components whose deletion balances that component.
std::vector<VertexId> balancing_vertices(const SignedGraph& g);

}  // namespace signcon
