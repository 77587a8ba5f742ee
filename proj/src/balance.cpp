#include "signcon/balance.hpp"

#include <algorithm>

namespace signcon {

bool is_balanced(const SignedGraph& g) { return analyze_balance(Subgraph(g)).all_balanced(); }

std::vector<VertexId> HararyBipartition::switching_set() const {
  std::vector<VertexId> out;
  for (const auto& p : parts) out.insert(out.end(), p.switched.begin(), p.switched.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<HararyBipartition> harary_bipartition(const SignedGraph& g) {
  const auto info = analyze_balance(Subgraph(g));
  if (!info.all_balanced()) return std::nullopt;
  HararyBipartition out;
  out.parts.resize(info.components.count);
  // Components are numbered in order of their smallest vertex, and the
  // potential is + at that vertex.
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto& part = out.parts[info.components.label[v]];
    part.component.push_back(v);
    if (info.potential[v] == Sign::Negative) part.switched.push_back(v);
  }
  return out;
}

std::vector<EdgeId> balancing_edges(const SignedGraph& g) {
  const Subgraph whole(g);
  const auto info = analyze_balance(whole);
  std::vector<EdgeId> out;
  for (const Edge& e : g.edges()) {
    const int c = info.components.label[e.u];
    if (info.balanced[c]) continue;
    Subgraph h(whole);
    h.remove_edge(e.id);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (info.components.label[v] != c) h.remove_vertex(v);
    if (analyze_balance(h).all_balanced()) out.push_back(e.id);
  }
  return out;
}

bool BalancingEdgeConditions::all_equal() const {
  const auto v = values();
  return std::all_of(v.begin(), v.end(), [&](bool b) { return b == v[0]; });
}

BalancingEdgeConditions check_balancing_edge_equivalences(const SignedGraph& g, EdgeId id,
                                                          std::size_t max_cycles) {
  g.check_edge(id);
  const Subgraph whole(g);
  const auto info = analyze_balance(whole);
  if (info.components.count != 1 || info.balanced[0]) {
    throw PreconditionError("balancing-edge conditions need a connected unbalanced graph");
  }
  const Edge& e = g.edge(id);
  BalancingEdgeConditions out;

  Subgraph minus(whole);
  minus.remove_edge(id);
  const auto minus_info = analyze_balance(minus);
  out.deletion_balances = minus_info.all_balanced();

  const auto cycles = elementary_cycles(whole, max_cycles);
  bool in_all_negative = true;
  bool in_some_positive = false;
  for (const auto& c : cycles) {
    const bool contains = std::binary_search(c.edges.begin(), c.edges.end(), id);
    if (c.sign == Sign::Negative && !contains) in_all_negative = false;
    if (c.sign == Sign::Positive && contains) in_some_positive = true;
  }
  out.in_every_negative_cycle = in_all_negative;
  out.negative_only = in_all_negative && !in_some_positive;

  const bool isthmus = minus_info.components.count > 1;
  if (!isthmus && out.deletion_balances) {
    // All chains between the endpoints of e in G-e share one sign, namely
    // the product of the endpoint potentials.
    const Sign chain = minus_info.potential[e.u] * minus_info.potential[e.v];
    out.chain_sign_differs = chain != e.sign;
  }

  if (out.deletion_balances) {
    // Switch G-e to all positive; e then carries sign sigma(e)*p(u)*p(v).
    // Components of G-e not containing both ends can be switched wholesale.
    const bool same_side = minus_info.components.label[e.u] == minus_info.components.label[e.v];
    const Sign after = e.sign * minus_info.potential[e.u] * minus_info.potential[e.v];
    out.switches_to_lone_negative = after == Sign::Negative || (!same_side && !e.is_loop());
  }
  return out;
}

std::vector<VertexId> balancing_vertices(const SignedGraph& g) {
  const Subgraph whole(g);
  const auto info = analyze_balance(whole);
  std::vector<VertexId> out;
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    const int c = info.components.label[x];
    if (info.balanced[c]) continue;
    Subgraph h(whole);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (v == x || info.components.label[v] != c) h.remove_vertex(v);
    if (analyze_balance(h).all_balanced()) out.push_back(x);
  }
  return out;
}

}  // namespace signcon
