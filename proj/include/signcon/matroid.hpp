#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "signcon/core.hpp"
#include "signcon/cycles.hpp"
#include "signcon/partition.hpp"

namespace signcon {

enum class CircuitType { PositiveCycle, TightHandcuff, LooseHandcuff, DisjointPair, NotACircuit };

std::string_view to_string(CircuitType t);

struct CircuitClassification {
  CircuitType type = CircuitType::NotACircuit;
  std::vector<std::vector<EdgeId>> cycles;  // one for a positive cycle, two for handcuffs
  std::vector<EdgeId> connector;            // chain joining the cycles of a loose handcuff

  bool frame_circuit() const noexcept {
    return type == CircuitType::PositiveCycle || type == CircuitType::TightHandcuff ||
           type == CircuitType::LooseHandcuff;
  }
  bool lift_circuit() const noexcept {
    return type == CircuitType::PositiveCycle || type == CircuitType::TightHandcuff ||
           type == CircuitType::DisjointPair;
  }
};

/// Shape of the edge set F. Duplicate ids are ignored; throws EdgeOutOfRange.
CircuitClassification classify_circuit(const SignedGraph& g, std::span<const EdgeId> F);

/// Counts on the spanning subgraph (V, F).
struct RankQuery {
  std::vector<EdgeId> F;
  int b = 0;      // balanced components
  int c = 0;      // components
  int delta = 0;  // 1 when (V, F) is unbalanced
};

RankQuery rank_query(const SignedGraph& g, std::span<const EdgeId> F);

/// n - b(V, F).
int frame_rank(const SignedGraph& g, std::span<const EdgeId> F);
/// n - c(V, F) + delta(V, F).
int lift_rank(const SignedGraph& g, std::span<const EdgeId> F);

/// Outer blocks, necklace constituents of a core that is a single
/// unbalanced necklace, and every other core whole.
ComponentPartition frame_components(const SignedGraph& g);

/// Each balanced block, and the union of the unbalanced blocks; a lone
/// unbalanced necklace block splits into its constituents.
ComponentPartition lift_components(const SignedGraph& g);

/// Edges in no frame circuit: isthmi leaving a balanced side, and
/// balancing edges.
std::vector<EdgeId> frame_isthmi(const SignedGraph& g);
/// Edges in no lift circuit: isthmi, and edges whose deletion balances g.
std::vector<EdgeId> lift_isthmi(const SignedGraph& g);

/// K1, or a single matroid component holding every edge and vertex.
bool is_frame_connected(const SignedGraph& g);
bool is_lift_connected(const SignedGraph& g);

/// Any two negative cycles share at least two vertices. Throws
/// CycleBudgetExceeded when the single unbalanced block has more than
/// `max_cycles` cycles.
bool is_quasibalanced(const SignedGraph& g, std::size_t max_cycles = kDefaultCycleCap);

}  // namespace signcon
