#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "signcon/core.hpp"

namespace signcon {

enum class PartitionKind { Graph, Sign, Positive, Negative, Frame, Lift };

std::string_view to_string(PartitionKind kind);
/// Inverse of to_string; nullopt for an unknown name.
std::optional<PartitionKind> partition_kind_from_string(std::string_view name);

/// Components of some kind. Vertex kinds put every vertex in one class;
/// edge kinds (frame, lift) partition the edges and list vertices with no
/// incident edge in `isolated`.
struct ComponentPartition {
  PartitionKind kind = PartitionKind::Graph;
  std::vector<std::vector<int>> classes;
  std::vector<VertexId> isolated;

  bool edge_kind() const noexcept {
    return kind == PartitionKind::Frame || kind == PartitionKind::Lift;
  }
  std::size_t size() const noexcept { return classes.size() + isolated.size(); }

  /// Sorts each class and orders classes by their smallest member.
  void normalize();
  bool operator==(const ComponentPartition&) const = default;
};

ComponentPartition graph_components(const SignedGraph& g);

/// Vertices with no incident edge (loops count as incident).
std::vector<VertexId> isolated_vertices(const SignedGraph& g);

}  // namespace signcon
