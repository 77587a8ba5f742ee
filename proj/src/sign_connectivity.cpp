#include "signcon/sign_connectivity.hpp"

#include <array>
#include <string>

#include "cover_search.hpp"

namespace signcon {
namespace {

void require_sign_connected(const SignedGraph& g, const char* op) {
  if (!is_sign_connected(g)) throw PreconditionError(std::string(op) + " needs a sign-connected graph");
}

bool all_positive_component(const SignedGraph& g, const Components& comps, int c) {
  for (const Edge& e : g.edges())
    if (comps.label[e.u] == c && e.sign == Sign::Negative) return false;
  return true;
}

}  // namespace

ComponentPartition sign_components(const SignedGraph& g) {
  const auto info = analyze_balance(Subgraph(g));
  ComponentPartition p{PartitionKind::Sign, {}, {}};
  std::vector<int> slot(info.components.count, -1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const int c = info.components.label[v];
    if (info.balanced[c]) {
      p.classes.push_back({v});
    } else {
      if (slot[c] < 0) {
        slot[c] = static_cast<int>(p.classes.size());
        p.classes.emplace_back();
      }
      p.classes[slot[c]].push_back(v);
    }
  }
  p.normalize();
  return p;
}

bool is_sign_connected(const Subgraph& h) {
  if (h.vertex_count() <= 1) return true;
  const auto info = analyze_balance(h);
  return info.components.count == 1 && !info.balanced[0];
}

bool is_sign_connected(const SignedGraph& g) { return is_sign_connected(Subgraph(g)); }

WitnessPair witness_chains(const SignedGraph& g, VertexId x, VertexId y) {
  g.check_vertex(x);
  g.check_vertex(y);
  const auto search = detail::search_cover(Subgraph(g), x);
  if (!search.reached_at(y, Sign::Positive) || !search.reached_at(y, Sign::Negative)) {
    throw NotSignConnected("vertices " + std::to_string(x) + " and " + std::to_string(y) +
                           " are not joined by chains of both signs");
  }
  return {detail::cover_path(g, search, x, y, Sign::Positive),
          detail::cover_path(g, search, x, y, Sign::Negative)};
}

std::vector<EdgeId> sign_isthmi(const SignedGraph& g) {
  require_sign_connected(g, "sign_isthmi");
  if (g.vertex_count() <= 1) throw PreconditionError("sign_isthmi needs more than one vertex");
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Subgraph h(g);
    h.remove_edge(e);
    if (!is_sign_connected(h)) out.push_back(e);
  }
  return out;
}

std::vector<VertexId> sign_articulation_vertices(const SignedGraph& g) {
  require_sign_connected(g, "sign_articulation_vertices");
  std::vector<VertexId> out;
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    Subgraph h(g);
    h.remove_vertex(x);
    if (!is_sign_connected(h)) out.push_back(x);
  }
  return out;
}

bool is_sign_block(const SignedGraph& g) { return sign_articulation_vertices(g).empty(); }

ComponentPartition positive_components(const SignedGraph& g) {
  const auto info = analyze_balance(Subgraph(g));
  ComponentPartition p{PartitionKind::Positive, {}, {}};
  // Slots: component c whole, or its two Harary sides.
  std::vector<std::array<int, 2>> slot(info.components.count, {-1, -1});
  std::vector<bool> split(info.components.count, false);
  for (int c = 0; c < info.components.count; ++c)
    split[c] = info.balanced[c] && !all_positive_component(g, info.components, c);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const int c = info.components.label[v];
    const int side = split[c] && info.potential[v] == Sign::Negative ? 1 : 0;
    if (slot[c][side] < 0) {
      slot[c][side] = static_cast<int>(p.classes.size());
      p.classes.emplace_back();
    }
    p.classes[slot[c][side]].push_back(v);
  }
  p.normalize();
  return p;
}

ComponentPartition negative_components(const SignedGraph& g) {
  const auto info = analyze_balance(Subgraph(g));
  ComponentPartition p{PartitionKind::Negative, {}, {}};
  std::vector<int> slot(info.components.count, -1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const int c = info.components.label[v];
    if (info.balanced[c] && all_positive_component(g, info.components, c)) {
      p.classes.push_back({v});
      continue;
    }
    if (slot[c] < 0) {
      slot[c] = static_cast<int>(p.classes.size());
      p.classes.emplace_back();
    }
    p.classes[slot[c]].push_back(v);
  }
  p.normalize();
  return p;
}

SignedGraph all_negative(const SignedGraph& g) {
  std::vector<EdgeSpec> specs;
  for (const Edge& e : g.edges()) specs.push_back({e.u, e.v, Sign::Negative});
  return SignedGraph(g.vertex_count(), specs);
}

bool is_parity_connected(const SignedGraph& g) { return is_sign_connected(all_negative(g)); }

}  // namespace signcon
