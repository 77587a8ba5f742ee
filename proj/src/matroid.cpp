#include "signcon/matroid.hpp"

#include <algorithm>
#include <map>

#include "signcon/balance.hpp"
#include "signcon/structure.hpp"

namespace signcon {
namespace {

Sign product(const SignedGraph& g, std::span<const EdgeId> edges) {
  Sign s = Sign::Positive;
  for (EdgeId id : edges) s = s * g.edge(id).sign;
  return s;
}

std::vector<EdgeId> sorted_unique(const SignedGraph& g, std::span<const EdgeId> F) {
  std::vector<EdgeId> out(F.begin(), F.end());
  for (EdgeId e : out) g.check_edge(e);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Splits the edges of a connected graph in which every vertex has degree
/// 2 except `centre` (degree 4) into its two closed ears through `centre`.
std::vector<std::vector<EdgeId>> ears_at(const SignedGraph& g, const Subgraph& h,
                                         VertexId centre) {
  std::vector<std::vector<EdgeId>> ears;
  std::vector<bool> used(g.edge_count(), false);
  for (EdgeId start : g.incident_edges(centre)) {
    if (!h.has_edge(start) || used[start]) continue;
    std::vector<EdgeId> ear{start};
    used[start] = true;
    VertexId at = g.edge(start).other(centre);
    EdgeId last = start;
    while (at != centre) {
      for (EdgeId id : g.incident_edges(at)) {
        if (!h.has_edge(id) || used[id] || id == last) continue;
        used[id] = true;
        ear.push_back(id);
        last = id;
        at = g.edge(id).other(at);
        break;
      }
    }
    std::sort(ear.begin(), ear.end());
    ears.push_back(std::move(ear));
  }
  std::sort(ears.begin(), ears.end());
  return ears;
}

}  // namespace

std::string_view to_string(CircuitType t) {
  switch (t) {
    case CircuitType::PositiveCycle: return "positive-cycle";
    case CircuitType::TightHandcuff: return "tight-handcuff";
    case CircuitType::LooseHandcuff: return "loose-handcuff";
    case CircuitType::DisjointPair: return "disjoint-pair";
    case CircuitType::NotACircuit: return "not-a-circuit";
  }
  return "not-a-circuit";
}

CircuitClassification classify_circuit(const SignedGraph& g, std::span<const EdgeId> F) {
  const auto edges = sorted_unique(g, F);
  CircuitClassification out;
  if (edges.empty()) return out;
  const Subgraph h(g, edges, false);
  const auto vertices = h.vertices();
  const auto comps = connected_components(h);
  std::vector<int> degree(g.vertex_count(), 0);
  for (EdgeId id : edges) {
    ++degree[g.edge(id).u];
    ++degree[g.edge(id).v];
  }
  auto count_degree = [&](int d) {
    return std::count_if(vertices.begin(), vertices.end(), [&](VertexId v) { return degree[v] == d; });
  };
  const auto nv = static_cast<std::ptrdiff_t>(vertices.size());
  const int cyclomatic =
      static_cast<int>(edges.size()) - static_cast<int>(vertices.size()) + comps.count;

  if (comps.count == 1 && count_degree(2) == nv) {
    if (product(g, edges) == Sign::Positive) {
      out.type = CircuitType::PositiveCycle;
      out.cycles = {edges};
    }
    return out;
  }

  if (comps.count == 2 && count_degree(2) == nv) {
    std::vector<std::vector<EdgeId>> parts(2);
    for (EdgeId id : edges) parts[comps.label[g.edge(id).u]].push_back(id);
    if (product(g, parts[0]) == Sign::Negative && product(g, parts[1]) == Sign::Negative) {
      std::sort(parts.begin(), parts.end());
      out.type = CircuitType::DisjointPair;
      out.cycles = std::move(parts);
    }
    return out;
  }

  if (comps.count != 1 || cyclomatic != 2) return out;

  if (count_degree(4) == 1 && count_degree(2) == nv - 1) {
    const VertexId centre =
        *std::find_if(vertices.begin(), vertices.end(), [&](VertexId v) { return degree[v] == 4; });
    auto ears = ears_at(g, h, centre);
    if (product(g, ears[0]) == Sign::Negative && product(g, ears[1]) == Sign::Negative) {
      out.type = CircuitType::TightHandcuff;
      out.cycles = std::move(ears);
    }
    return out;
  }

  if (count_degree(3) == 2 && count_degree(2) == nv - 2) {
    // A handcuff when the edges joining the two branch vertices are bridges;
    // otherwise a theta.
    std::vector<EdgeId> connector;
    for (EdgeId id : edges) {
      if (g.edge(id).is_loop()) continue;
      Subgraph minus(h);
      minus.remove_edge(id);
      if (connected_components(minus).count > 1) connector.push_back(id);
    }
    if (connector.empty()) return out;
    std::vector<EdgeId> rest;
    std::set_difference(edges.begin(), edges.end(), connector.begin(), connector.end(),
                        std::back_inserter(rest));
    const Subgraph cycles(g, rest, false);
    const auto cycle_comps = connected_components(cycles);
    if (cycle_comps.count != 2) return out;
    std::vector<std::vector<EdgeId>> parts(2);
    for (EdgeId id : rest) parts[cycle_comps.label[g.edge(id).u]].push_back(id);
    if (product(g, parts[0]) == Sign::Negative && product(g, parts[1]) == Sign::Negative) {
      std::sort(parts.begin(), parts.end());
      out.type = CircuitType::LooseHandcuff;
      out.cycles = std::move(parts);
      out.connector = std::move(connector);
    }
  }
  return out;
}

RankQuery rank_query(const SignedGraph& g, std::span<const EdgeId> F) {
  RankQuery q;
  q.F = sorted_unique(g, F);
  const auto info = analyze_balance(Subgraph(g, q.F, true));
  q.c = info.components.count;
  q.b = info.balanced_count();
  q.delta = info.all_balanced() ? 0 : 1;
  return q;
}

int frame_rank(const SignedGraph& g, std::span<const EdgeId> F) {
  return g.vertex_count() - rank_query(g, F).b;
}

int lift_rank(const SignedGraph& g, std::span<const EdgeId> F) {
  const auto q = rank_query(g, F);
  return g.vertex_count() - q.c + q.delta;
}

ComponentPartition frame_components(const SignedGraph& g) {
  const auto d = block_decomposition(g);
  ComponentPartition p{PartitionKind::Frame, {}, isolated_vertices(g)};
  for (const auto& b : d.blocks)
    if (!b.inner && !b.edges.empty()) p.classes.push_back(b.edges);
  for (const auto& core : d.cores) {
    if (core.necklace) {
      for (const auto& c : *core.necklace) p.classes.push_back(c);
    } else {
      p.classes.push_back(core.edges);
    }
  }
  p.normalize();
  return p;
}

ComponentPartition lift_components(const SignedGraph& g) {
  const auto d = block_decomposition(g);
  ComponentPartition p{PartitionKind::Lift, {}, isolated_vertices(g)};
  std::vector<EdgeId> unbalanced;
  std::vector<int> unbalanced_blocks;
  for (int i = 0; i < static_cast<int>(d.blocks.size()); ++i) {
    const auto& b = d.blocks[i];
    if (b.edges.empty()) continue;
    if (b.balanced) {
      p.classes.push_back(b.edges);
    } else {
      unbalanced.insert(unbalanced.end(), b.edges.begin(), b.edges.end());
      unbalanced_blocks.push_back(i);
    }
  }
  if (unbalanced_blocks.size() == 1) {
    const auto necklace = detect_necklace(g, d.blocks[unbalanced_blocks[0]].edges);
    if (necklace) {
      for (const auto& c : *necklace) p.classes.push_back(c);
      unbalanced.clear();
    }
  }
  if (!unbalanced.empty()) p.classes.push_back(std::move(unbalanced));
  p.normalize();
  return p;
}

namespace {

/// For each isthmus, whether one of the two sides left by deleting it is
/// balanced. Sides are the components of its endpoints in g - e.
std::map<EdgeId, bool> isthmus_side_balance(const SignedGraph& g) {
  std::map<EdgeId, bool> out;
  const Subgraph whole(g);
  for (EdgeId e : isthmi(g)) {
    Subgraph minus(whole);
    minus.remove_edge(e);
    const auto info = analyze_balance(minus);
    const Edge& edge = g.edge(e);
    out[e] = info.balanced[info.components.label[edge.u]] ||
             info.balanced[info.components.label[edge.v]];
  }
  return out;
}

std::vector<EdgeId> merged(std::vector<EdgeId> a, const std::vector<EdgeId>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

std::vector<EdgeId> frame_isthmi(const SignedGraph& g) {
  std::vector<EdgeId> out;
  for (const auto& [e, side_balanced] : isthmus_side_balance(g))
    if (side_balanced) out.push_back(e);
  return merged(std::move(out), balancing_edges(g));
}

std::vector<EdgeId> lift_isthmi(const SignedGraph& g) {
  // Deleting a non-isthmus must balance the whole graph, so balancing
  // edges count only when theirs is the one unbalanced component.
  const auto info = analyze_balance(Subgraph(g));
  const int unbalanced = info.components.count - info.balanced_count();
  return unbalanced == 1 ? merged(isthmi(g), balancing_edges(g)) : isthmi(g);
}

bool is_frame_connected(const SignedGraph& g) {
  if (g.vertex_count() == 1 && g.edge_count() == 0) return true;
  return frame_components(g).size() == 1;
}

bool is_lift_connected(const SignedGraph& g) {
  if (g.vertex_count() == 1 && g.edge_count() == 0) return true;
  return lift_components(g).size() == 1;
}

bool is_quasibalanced(const SignedGraph& g, std::size_t max_cycles) {
  const auto d = block_decomposition(g);
  const Block* unbalanced = nullptr;
  for (const auto& b : d.blocks) {
    if (b.balanced) continue;
    if (unbalanced) return false;
    unbalanced = &b;
  }
  if (!unbalanced) return true;
  std::vector<Cycle> negative;
  for (auto& c : elementary_cycles(Subgraph(g, unbalanced->edges, false), max_cycles))
    if (c.sign == Sign::Negative) negative.push_back(std::move(c));
  for (std::size_t i = 0; i < negative.size(); ++i) {
    for (std::size_t j = i + 1; j < negative.size(); ++j) {
      std::vector<VertexId> common;
      std::set_intersection(negative[i].vertices.begin(), negative[i].vertices.end(),
                            negative[j].vertices.begin(), negative[j].vertices.end(),
                            std::back_inserter(common));
      if (common.size() < 2) return false;
    }
  }
  return true;
}

}  // namespace signcon
