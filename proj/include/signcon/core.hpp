#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "signcon/errors.hpp"

namespace signcon {

using VertexId = int;
using EdgeId = int;

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::Positive : Sign::Negative;
}
constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}
constexpr char to_char(Sign s) noexcept { return s == Sign::Positive ? '+' : '-'; }

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;
  Sign sign;

  bool is_loop() const noexcept { return u == v; }
  VertexId other(VertexId x) const noexcept { return x == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

struct EdgeSpec {
  VertexId u;
  VertexId v;
  Sign sign;
};

/// Finite undirected multigraph with an edge signature. Loops and parallel
/// edges are allowed. Vertices are 0..n-1, edge ids are 0..m-1 in insertion
/// order. Immutable once built.
class SignedGraph {
 public:
  SignedGraph() = default;
  explicit SignedGraph(int vertex_count, const std::vector<EdgeSpec>& edges = {});

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const;
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Edges incident with v; a loop is listed once.
  std::span<const EdgeId> incident_edges(VertexId v) const;
  /// Degree with loops counted twice.
  int degree(VertexId v) const;

  bool has_vertex(VertexId v) const noexcept { return v >= 0 && v < n_; }
  void check_vertex(VertexId v) const;
  void check_edge(EdgeId e) const;

  bool operator==(const SignedGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

// ---------------------------------------------------------------------------
// Walks (chains)

struct Step {
  EdgeId edge;
  bool forward;  // traversed from edge.u to edge.v
  bool operator==(const Step&) const = default;
};

/// A chain: start vertex plus an incidence-consistent edge sequence.
struct Walk {
  VertexId start = 0;
  std::vector<Step> steps;

  std::size_t length() const noexcept { return steps.size(); }
  std::vector<EdgeId> edge_ids() const;
  bool operator==(const Walk&) const = default;
};

/// Builds a walk from an edge-id sequence, inferring traversal directions.
Walk make_walk(const SignedGraph& g, VertexId start, std::span<const EdgeId> edges);

/// Vertex sequence of a walk (length + 1 entries). Throws InvalidWalk.
std::vector<VertexId> walk_vertices(const SignedGraph& g, const Walk& w);
VertexId walk_end(const SignedGraph& g, const Walk& w);
Sign walk_sign(const SignedGraph& g, const Walk& w);

// ---------------------------------------------------------------------------
// Switching and the signed double cover

/// Negates every edge with exactly one endpoint in `switching_set`.
SignedGraph switched(const SignedGraph& g, std::span<const VertexId> switching_set);

struct CoverVertex {
  VertexId vertex;
  Sign sheet;
  bool operator==(const CoverVertex&) const = default;
};

struct CoverEdge {
  EdgeId base;
  int from;  // index into DoubleCover::vertices
  int to;
};

/// Vertex (v,s) has index 2v for s=+ and 2v+1 for s=-. Base edge e={u,v}
/// lifts to (u,s)-(v,s*sigma(e)) for s=+ then s=-.
struct DoubleCover {
  std::vector<CoverVertex> vertices;
  std::vector<CoverEdge> edges;

  static int index_of(VertexId v, Sign s) noexcept { return 2 * v + (s == Sign::Positive ? 0 : 1); }
  std::vector<std::vector<int>> components() const;
};

DoubleCover double_cover(const SignedGraph& g);

struct SignSet {
  bool positive = false;
  bool negative = false;

  bool both() const noexcept { return positive && negative; }
  bool empty() const noexcept { return !positive && !negative; }
  bool contains(Sign s) const noexcept { return s == Sign::Positive ? positive : negative; }
  void insert(Sign s) noexcept { (s == Sign::Positive ? positive : negative) = true; }
  bool operator==(const SignSet&) const = default;
};

/// For each vertex y, the signs of chains from x to y.
std::vector<SignSet> sign_reachability(const SignedGraph& g, VertexId x);

// ---------------------------------------------------------------------------
// Restrictions of a graph to a subset of its vertices and edges.

class Subgraph {
 public:
  explicit Subgraph(const SignedGraph& g);
  Subgraph(const SignedGraph& g, std::span<const EdgeId> edges, bool spanning);

  const SignedGraph& graph() const noexcept { return *graph_; }

  Subgraph& remove_edge(EdgeId e);
  Subgraph& remove_vertex(VertexId v);

  bool has_vertex(VertexId v) const { return vertex_on_[v]; }
  /// True when the edge and both its endpoints are present.
  bool has_edge(EdgeId e) const;
  int vertex_count() const;
  std::vector<VertexId> vertices() const;
  std::vector<EdgeId> edge_ids() const;

 private:
  const SignedGraph* graph_;
  std::vector<bool> vertex_on_;
  std::vector<bool> edge_on_;
};

/// Connected components of a restriction; label is -1 on absent vertices.
struct Components {
  std::vector<int> label;
  int count = 0;
};

Components connected_components(const Subgraph& h);

/// Per-component balance with a Harary potential on balanced components.
/// potential[v] is the sheet on which v is reached from the component's
/// smallest vertex on sheet +; meaningful only where the component is balanced.
struct BalanceInfo {
  Components components;
  std::vector<bool> balanced;    // per component
  std::vector<VertexId> root;    // smallest vertex per component
  std::vector<Sign> potential;   // per vertex

  int balanced_count() const;
  bool all_balanced() const;
};

BalanceInfo analyze_balance(const Subgraph& h);

/// A restriction copied out as a standalone graph with dense ids, keeping
/// the original vertex and edge order.
struct Extracted {
  SignedGraph graph;
  std::vector<VertexId> vertex_map;  // new -> old
  std::vector<EdgeId> edge_map;      // new -> old
};

Extracted extract(const Subgraph& h);
SignedGraph without_edge(const SignedGraph& g, EdgeId e);
SignedGraph without_vertex(const SignedGraph& g, VertexId v);
Extracted induced_subgraph(const SignedGraph& g, std::span<const VertexId> vertices);

}  // namespace signcon
