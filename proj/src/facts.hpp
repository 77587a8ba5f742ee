#pragma once

#include <optional>
#include <vector>

#include "signcon/oracle.hpp"
#include "signcon/structure.hpp"

namespace signcon::verify {

/// Per-graph cache of oracle answers and library results shared by the
/// properties. Not thread safe; one instance per graph.
class GraphFacts {
 public:
  explicit GraphFacts(SignedGraph graph);

  const SignedGraph g;
  const int n;
  const int m;

  // Oracle side.
  const std::vector<oracle::SignedEdgeSet>& cycles();
  const std::vector<std::vector<VertexId>>& cycle_vertices();
  const std::vector<oracle::Circuit>& frame_circuits();
  const std::vector<oracle::Circuit>& lift_circuits();
  const std::vector<int>& frame_circuit_ranks();
  const std::vector<int>& lift_circuit_ranks();
  const std::vector<std::vector<SignSet>>& reach();
  const std::vector<std::vector<VertexId>>& classes();
  bool connected();
  bool balanced();
  int component_of(VertexId v);
  /// Some negative cycle lies in the component of v.
  bool component_unbalanced(int component);
  bool quasibalanced();

  // Library side.
  bool sign_connected();
  const BlockDecomposition& blocks();
  const std::vector<EdgeId>& isthmi();
  const std::vector<EdgeId>& balancing_edges();
  const std::vector<EdgeId>& frame_isthmi();
  const std::vector<EdgeId>& lift_isthmi();
  /// Requires sign_connected() and n > 1.
  const std::vector<EdgeId>& sign_isthmi();

  oracle::EnumerationBudget budget;

 private:
  std::optional<std::vector<oracle::SignedEdgeSet>> cycles_;
  std::optional<std::vector<std::vector<VertexId>>> cycle_vertices_;
  std::optional<std::vector<oracle::Circuit>> frame_circuits_, lift_circuits_;
  std::optional<std::vector<int>> frame_ranks_, lift_ranks_;
  std::optional<std::vector<std::vector<SignSet>>> reach_;
  std::optional<std::vector<std::vector<VertexId>>> classes_;
  std::vector<int> component_;
  std::optional<bool> sign_connected_;
  std::optional<BlockDecomposition> blocks_;
  std::optional<std::vector<EdgeId>> isthmi_, balancing_, frame_isthmi_, lift_isthmi_, sign_isthmi_;
};

}  // namespace signcon::verify
