#include "signcon/core.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "cover_search.hpp"
#include "signcon/partition.hpp"

namespace signcon {

SignedGraph::SignedGraph(int vertex_count, const std::vector<EdgeSpec>& edges)
    : n_(vertex_count), incidence_(vertex_count < 0 ? 0 : vertex_count) {
  if (vertex_count < 0) throw VertexOutOfRange("negative vertex count");
  edges_.reserve(edges.size());
  for (const auto& spec : edges) {
    if (!has_vertex(spec.u) || !has_vertex(spec.v)) {
      throw VertexOutOfRange("edge endpoint out of range: " + std::to_string(spec.u) + " " +
                             std::to_string(spec.v));
    }
    const EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(Edge{id, spec.u, spec.v, spec.sign});
    incidence_[spec.u].push_back(id);
    if (spec.v != spec.u) incidence_[spec.v].push_back(id);
  }
}

const Edge& SignedGraph::edge(EdgeId e) const {
  check_edge(e);
  return edges_[e];
}

std::span<const EdgeId> SignedGraph::incident_edges(VertexId v) const {
  check_vertex(v);
  return incidence_[v];
}

int SignedGraph::degree(VertexId v) const {
  int d = 0;
  for (EdgeId e : incident_edges(v)) d += edges_[e].is_loop() ? 2 : 1;
  return d;
}

void SignedGraph::check_vertex(VertexId v) const {
  if (!has_vertex(v)) throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range");
}

void SignedGraph::check_edge(EdgeId e) const {
  if (e < 0 || e >= edge_count()) throw EdgeOutOfRange("edge " + std::to_string(e) + " out of range");
}

// ---------------------------------------------------------------------------

std::vector<EdgeId> Walk::edge_ids() const {
  std::vector<EdgeId> ids;
  ids.reserve(steps.size());
  for (const auto& s : steps) ids.push_back(s.edge);
  return ids;
}

Walk make_walk(const SignedGraph& g, VertexId start, std::span<const EdgeId> edges) {
  if (!g.has_vertex(start)) throw InvalidWalk("start vertex out of range");
  Walk w{start, {}};
  VertexId at = start;
  for (EdgeId id : edges) {
    if (id < 0 || id >= g.edge_count()) throw InvalidWalk("edge id out of range: " + std::to_string(id));
    const Edge& e = g.edge(id);
    if (e.u == at) {
      w.steps.push_back({id, true});
      at = e.v;
    } else if (e.v == at) {
      w.steps.push_back({id, false});
      at = e.u;
    } else {
      throw InvalidWalk("edge " + std::to_string(id) + " is not incident with vertex " +
                        std::to_string(at));
    }
  }
  return w;
}

std::vector<VertexId> walk_vertices(const SignedGraph& g, const Walk& w) {
  if (!g.has_vertex(w.start)) throw InvalidWalk("start vertex out of range");
  std::vector<VertexId> seq{w.start};
  for (const auto& step : w.steps) {
    if (step.edge < 0 || step.edge >= g.edge_count()) {
      throw InvalidWalk("edge id out of range: " + std::to_string(step.edge));
    }
    const Edge& e = g.edge(step.edge);
    const VertexId from = step.forward ? e.u : e.v;
    const VertexId to = step.forward ? e.v : e.u;
    if (from != seq.back()) {
      throw InvalidWalk("step on edge " + std::to_string(step.edge) + " does not leave vertex " +
                        std::to_string(seq.back()));
    }
    seq.push_back(to);
  }
  return seq;
}

VertexId walk_end(const SignedGraph& g, const Walk& w) { return walk_vertices(g, w).back(); }

Sign walk_sign(const SignedGraph& g, const Walk& w) {
  walk_vertices(g, w);
  Sign s = Sign::Positive;
  for (const auto& step : w.steps) s = s * g.edge(step.edge).sign;
  return s;
}

// ---------------------------------------------------------------------------

SignedGraph switched(const SignedGraph& g, std::span<const VertexId> switching_set) {
  std::vector<bool> in(g.vertex_count(), false);
  for (VertexId v : switching_set) {
    g.check_vertex(v);
    in[v] = true;
  }
  std::vector<EdgeSpec> specs;
  specs.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    const bool cut = in[e.u] != in[e.v];
    specs.push_back({e.u, e.v, cut ? -e.sign : e.sign});
  }
  return SignedGraph(g.vertex_count(), specs);
}

DoubleCover double_cover(const SignedGraph& g) {
  DoubleCover cover;
  cover.vertices.reserve(2 * g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    cover.vertices.push_back({v, Sign::Positive});
    cover.vertices.push_back({v, Sign::Negative});
  }
  for (const Edge& e : g.edges()) {
    for (Sign s : {Sign::Positive, Sign::Negative}) {
      cover.edges.push_back(
          {e.id, DoubleCover::index_of(e.u, s), DoubleCover::index_of(e.v, s * e.sign)});
    }
  }
  return cover;
}

std::vector<std::vector<int>> DoubleCover::components() const {
  const int n = static_cast<int>(vertices.size());
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (int y : adj[x]) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

namespace detail {

CoverSearch search_cover(const Subgraph& h, VertexId root) {
  const SignedGraph& g = h.graph();
  const int states = 2 * g.vertex_count();
  CoverSearch out{std::vector<int>(states, -1), std::vector<EdgeId>(states, -1),
                  std::vector<bool>(states, false)};
  const int start = DoubleCover::index_of(root, Sign::Positive);
  out.reached[start] = true;
  std::deque<int> queue{start};
  while (!queue.empty()) {
    const int state = queue.front();
    queue.pop_front();
    const VertexId v = state / 2;
    const Sign sheet = state % 2 == 0 ? Sign::Positive : Sign::Negative;
    for (EdgeId id : g.incident_edges(v)) {
      if (!h.has_edge(id)) continue;
      const Edge& e = g.edge(id);
      const int next = DoubleCover::index_of(e.other(v), sheet * e.sign);
      if (out.reached[next]) continue;
      out.reached[next] = true;
      out.parent_state[next] = state;
      out.parent_edge[next] = id;
      queue.push_back(next);
    }
  }
  return out;
}

Walk cover_path(const SignedGraph& g, const CoverSearch& search, VertexId root, VertexId target,
                Sign s) {
  std::vector<EdgeId> reversed;
  int state = DoubleCover::index_of(target, s);
  while (search.parent_state[state] != -1) {
    reversed.push_back(search.parent_edge[state]);
    state = search.parent_state[state];
  }
  std::reverse(reversed.begin(), reversed.end());
  return make_walk(g, root, reversed);
}

}  // namespace detail

std::vector<SignSet> sign_reachability(const SignedGraph& g, VertexId x) {
  g.check_vertex(x);
  const Subgraph whole(g);
  const auto search = detail::search_cover(whole, x);
  std::vector<SignSet> out(g.vertex_count());
  for (VertexId y = 0; y < g.vertex_count(); ++y) {
    if (search.reached_at(y, Sign::Positive)) out[y].insert(Sign::Positive);
    if (search.reached_at(y, Sign::Negative)) out[y].insert(Sign::Negative);
  }
  return out;
}

// ---------------------------------------------------------------------------

Subgraph::Subgraph(const SignedGraph& g)
    : graph_(&g), vertex_on_(g.vertex_count(), true), edge_on_(g.edge_count(), true) {}

Subgraph::Subgraph(const SignedGraph& g, std::span<const EdgeId> edges, bool spanning)
    : graph_(&g), vertex_on_(g.vertex_count(), spanning), edge_on_(g.edge_count(), false) {
  for (EdgeId id : edges) {
    const Edge& e = g.edge(id);
    edge_on_[id] = true;
    vertex_on_[e.u] = true;
    vertex_on_[e.v] = true;
  }
}

Subgraph& Subgraph::remove_edge(EdgeId e) {
  graph_->check_edge(e);
  edge_on_[e] = false;
  return *this;
}

Subgraph& Subgraph::remove_vertex(VertexId v) {
  graph_->check_vertex(v);
  vertex_on_[v] = false;
  return *this;
}

bool Subgraph::has_edge(EdgeId id) const {
  if (!edge_on_[id]) return false;
  const Edge& e = graph_->edge(id);
  return vertex_on_[e.u] && vertex_on_[e.v];
}

int Subgraph::vertex_count() const {
  return static_cast<int>(std::count(vertex_on_.begin(), vertex_on_.end(), true));
}

std::vector<VertexId> Subgraph::vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < graph_->vertex_count(); ++v)
    if (vertex_on_[v]) out.push_back(v);
  return out;
}

std::vector<EdgeId> Subgraph::edge_ids() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < graph_->edge_count(); ++e)
    if (has_edge(e)) out.push_back(e);
  return out;
}

Components connected_components(const Subgraph& h) {
  const SignedGraph& g = h.graph();
  Components out{std::vector<int>(g.vertex_count(), -1), 0};
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (!h.has_vertex(s) || out.label[s] != -1) continue;
    const int c = out.count++;
    std::vector<VertexId> stack{s};
    out.label[s] = c;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId id : g.incident_edges(v)) {
        if (!h.has_edge(id)) continue;
        const VertexId w = g.edge(id).other(v);
        if (out.label[w] == -1) {
          out.label[w] = c;
          stack.push_back(w);
        }
      }
    }
  }
  return out;
}

int BalanceInfo::balanced_count() const {
  return static_cast<int>(std::count(balanced.begin(), balanced.end(), true));
}

bool BalanceInfo::all_balanced() const {
  return std::all_of(balanced.begin(), balanced.end(), [](bool b) { return b; });
}

BalanceInfo analyze_balance(const Subgraph& h) {
  const SignedGraph& g = h.graph();
  BalanceInfo info;
  info.components = connected_components(h);
  info.balanced.assign(info.components.count, true);
  info.root.assign(info.components.count, -1);
  info.potential.assign(g.vertex_count(), Sign::Positive);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const int c = info.components.label[v];
    if (c < 0 || info.root[c] != -1) continue;
    info.root[c] = v;
    const auto search = detail::search_cover(h, v);
    info.balanced[c] = !search.reached_at(v, Sign::Negative);
    for (VertexId w = 0; w < g.vertex_count(); ++w) {
      if (info.components.label[w] != c) continue;
      info.potential[w] = search.reached_at(w, Sign::Positive) ? Sign::Positive : Sign::Negative;
    }
  }
  return info;
}

Extracted extract(const Subgraph& h) {
  const SignedGraph& g = h.graph();
  Extracted out;
  std::vector<VertexId> relabel(g.vertex_count(), -1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!h.has_vertex(v)) continue;
    relabel[v] = static_cast<VertexId>(out.vertex_map.size());
    out.vertex_map.push_back(v);
  }
  std::vector<EdgeSpec> specs;
  for (const Edge& e : g.edges()) {
    if (!h.has_edge(e.id)) continue;
    specs.push_back({relabel[e.u], relabel[e.v], e.sign});
    out.edge_map.push_back(e.id);
  }
  out.graph = SignedGraph(static_cast<int>(out.vertex_map.size()), specs);
  return out;
}

SignedGraph without_edge(const SignedGraph& g, EdgeId e) {
  Subgraph h(g);
  h.remove_edge(e);
  return extract(h).graph;
}

SignedGraph without_vertex(const SignedGraph& g, VertexId v) {
  Subgraph h(g);
  h.remove_vertex(v);
  return extract(h).graph;
}

Extracted induced_subgraph(const SignedGraph& g, std::span<const VertexId> vertices) {
  Subgraph h(g);
  std::vector<bool> keep(g.vertex_count(), false);
  for (VertexId v : vertices) {
    g.check_vertex(v);
    keep[v] = true;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!keep[v]) h.remove_vertex(v);
  return extract(h);
}

// ---------------------------------------------------------------------------

std::string_view to_string(PartitionKind kind) {
  switch (kind) {
    case PartitionKind::Graph: return "graph";
    case PartitionKind::Sign: return "sign";
    case PartitionKind::Positive: return "positive";
    case PartitionKind::Negative: return "negative";
    case PartitionKind::Frame: return "frame";
    case PartitionKind::Lift: return "lift";
  }
  return "unknown";
}

std::optional<PartitionKind> partition_kind_from_string(std::string_view name) {
  for (auto k : {PartitionKind::Graph, PartitionKind::Sign, PartitionKind::Positive, PartitionKind::Negative,
                 PartitionKind::Frame, PartitionKind::Lift})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

void ComponentPartition::normalize() {
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end());
  std::sort(isolated.begin(), isolated.end());
}

ComponentPartition graph_components(const SignedGraph& g) {
  const auto comps = connected_components(Subgraph(g));
  ComponentPartition p{PartitionKind::Graph, std::vector<std::vector<int>>(comps.count), {}};
  for (VertexId v = 0; v < g.vertex_count(); ++v) p.classes[comps.label[v]].push_back(v);
  p.normalize();
  return p;
}

std::vector<VertexId> isolated_vertices(const SignedGraph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.incident_edges(v).empty()) out.push_back(v);
  return out;
}

}  // namespace signcon
