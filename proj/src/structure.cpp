#include "signcon/structure.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace signcon {
namespace {

struct FrameState {
  VertexId v;
  EdgeId parent_edge;
  std::size_t next;
};

/// Edge sets of the biconnected pieces of the non-loop part of `h`.
std::vector<std::vector<EdgeId>> biconnected_edge_sets(const Subgraph& h) {
  const SignedGraph& g = h.graph();
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> edge_stack;
  std::vector<std::vector<EdgeId>> out;
  int clock = 0;
  for (VertexId root = 0; root < n; ++root) {
    if (!h.has_vertex(root) || disc[root] != -1) continue;
    disc[root] = low[root] = clock++;
    std::vector<FrameState> frames{{root, -1, 0}};
    while (!frames.empty()) {
      FrameState& f = frames.back();
      const auto incident = g.incident_edges(f.v);
      if (f.next < incident.size()) {
        const EdgeId id = incident[f.next++];
        const Edge& e = g.edge(id);
        if (e.is_loop() || id == f.parent_edge || !h.has_edge(id)) continue;
        const VertexId w = e.other(f.v);
        if (disc[w] == -1) {
          edge_stack.push_back(id);
          disc[w] = low[w] = clock++;
          frames.push_back({w, id, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back(id);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const FrameState done = f;
      frames.pop_back();
      if (frames.empty()) break;
      const VertexId parent = frames.back().v;
      low[parent] = std::min(low[parent], low[done.v]);
      if (low[done.v] >= disc[parent]) {
        std::vector<EdgeId> block;
        while (true) {
          const EdgeId top = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(top);
          if (top == done.parent_edge) break;
        }
        std::sort(block.begin(), block.end());
        out.push_back(std::move(block));
      }
    }
  }
  return out;
}

std::vector<VertexId> vertices_of(const SignedGraph& g, std::span<const EdgeId> edges) {
  std::vector<VertexId> vs;
  for (EdgeId id : edges) {
    vs.push_back(g.edge(id).u);
    vs.push_back(g.edge(id).v);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool edges_balanced(const SignedGraph& g, std::span<const EdgeId> edges) {
  return analyze_balance(Subgraph(g, edges, false)).all_balanced();
}

Sign product(const SignedGraph& g, std::span<const EdgeId> edges) {
  Sign s = Sign::Positive;
  for (EdgeId id : edges) s = s * g.edge(id).sign;
  return s;
}

/// Necklace constituents of an unbalanced block, given as its edge set.
std::optional<Necklace> necklace_of(const SignedGraph& g, const std::vector<EdgeId>& block) {
  if (block.size() < 2 || edges_balanced(g, block)) return std::nullopt;
  const Subgraph whole_block(g, block, false);
  const auto block_vertices = whole_block.vertices();

  // Hinges are the vertices on every negative cycle of the block, that is,
  // its balancing vertices.
  std::vector<bool> hinge(g.vertex_count(), false);
  std::vector<VertexId> hinges;
  for (VertexId x : block_vertices) {
    Subgraph h(whole_block);
    h.remove_vertex(x);
    if (analyze_balance(h).all_balanced()) {
      hinge[x] = true;
      hinges.push_back(x);
    }
  }
  if (hinges.size() < 2) return std::nullopt;

  // Pieces: components of the block minus its hinges, with their edges, and
  // each edge joining two hinges on its own.
  Subgraph inner(whole_block);
  for (VertexId x : hinges) inner.remove_vertex(x);
  const auto comps = connected_components(inner);
  std::vector<std::vector<EdgeId>> pieces(comps.count);
  for (EdgeId id : block) {
    const Edge& e = g.edge(id);
    if (!hinge[e.u]) {
      pieces[comps.label[e.u]].push_back(id);
    } else if (!hinge[e.v]) {
      pieces[comps.label[e.v]].push_back(id);
    } else {
      pieces.push_back({id});
    }
  }

  // Group pieces by the pair of hinges they attach to.
  std::map<std::pair<VertexId, VertexId>, std::vector<int>> by_pair;
  for (int p = 0; p < static_cast<int>(pieces.size()); ++p) {
    std::vector<VertexId> attach;
    for (VertexId v : vertices_of(g, pieces[p]))
      if (hinge[v]) attach.push_back(v);
    if (attach.size() != 2) return std::nullopt;
    by_pair[{attach[0], attach[1]}].push_back(p);
  }

  std::vector<std::vector<EdgeId>> constituents;
  auto merged = [&](const std::vector<int>& ids) {
    std::vector<EdgeId> edges;
    for (int p : ids) edges.insert(edges.end(), pieces[p].begin(), pieces[p].end());
    std::sort(edges.begin(), edges.end());
    return edges;
  };

  if (hinges.size() == 2) {
    // Two constituents: the pieces carrying each sign of hinge-to-hinge chain.
    const VertexId a = hinges[0];
    const VertexId b = hinges[1];
    std::vector<int> plus, minus;
    for (int p : by_pair.begin()->second) {
      const auto info = analyze_balance(Subgraph(g, pieces[p], false));
      if (!info.all_balanced()) return std::nullopt;
      (info.potential[a] * info.potential[b] == Sign::Positive ? plus : minus).push_back(p);
    }
    if (plus.empty() || minus.empty()) return std::nullopt;
    constituents = {merged(plus), merged(minus)};
  } else {
    // Hinges must form a single cycle in the pair graph.
    std::map<VertexId, std::vector<VertexId>> partners;
    for (const auto& [pair, ids] : by_pair) {
      partners[pair.first].push_back(pair.second);
      partners[pair.second].push_back(pair.first);
      constituents.push_back(merged(ids));
    }
    for (VertexId x : hinges)
      if (partners[x].size() != 2) return std::nullopt;
    std::set<VertexId> seen{hinges[0]};
    VertexId prev = hinges[0];
    VertexId at = partners[prev][0];
    while (at != hinges[0]) {
      seen.insert(at);
      const auto& p = partners[at];
      const VertexId next = p[0] == prev ? p[1] : p[0];
      prev = at;
      at = next;
    }
    if (seen.size() != hinges.size()) return std::nullopt;
  }

  for (const auto& c : constituents) {
    if (!edges_balanced(g, c)) return std::nullopt;
    if (c.size() > 1 && biconnected_edge_sets(Subgraph(g, c, false)).size() != 1) return std::nullopt;
  }

  // Cyclic order: start from the constituent with the smallest edge and
  // step towards the neighbour with the smaller first edge.
  std::sort(constituents.begin(), constituents.end());
  const int k = static_cast<int>(constituents.size());
  if (k == 2) return constituents;
  auto shares_hinge = [&](int i, int j) {
    const auto vi = vertices_of(g, constituents[i]);
    const auto vj = vertices_of(g, constituents[j]);
    for (VertexId v : vi)
      if (hinge[v] && std::binary_search(vj.begin(), vj.end(), v)) return true;
    return false;
  };
  Necklace ordered{constituents[0]};
  std::vector<bool> used(k, false);
  used[0] = true;
  int current = 0;
  for (int step = 1; step < k; ++step) {
    int next = -1;
    for (int j = 0; j < k; ++j) {
      if (!used[j] && shares_hinge(current, j)) {
        next = j;
        break;
      }
    }
    if (next < 0) return std::nullopt;
    used[next] = true;
    ordered.push_back(constituents[next]);
    current = next;
  }
  return ordered;
}

}  // namespace

int BlockDecomposition::block_of_edge(EdgeId e) const {
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
    if (std::binary_search(blocks[b].edges.begin(), blocks[b].edges.end(), e)) return b;
  return -1;
}

BlockDecomposition block_decomposition(const SignedGraph& g) {
  const Subgraph whole(g);
  const auto comps = connected_components(whole);
  BlockDecomposition out;

  auto edge_sets = biconnected_edge_sets(whole);
  for (const Edge& e : g.edges())
    if (e.is_loop()) edge_sets.push_back({e.id});
  std::sort(edge_sets.begin(), edge_sets.end());
  for (auto& edges : edge_sets) {
    Block b;
    b.vertices = vertices_of(g, edges);
    b.edges = std::move(edges);
    b.component = comps.label[b.vertices.front()];
    b.balanced = edges_balanced(g, b.edges);
    out.blocks.push_back(std::move(b));
  }
  for (VertexId v : isolated_vertices(g)) {
    Block b;
    b.vertices = {v};
    b.component = comps.label[v];
    out.blocks.push_back(std::move(b));
  }

  std::vector<int> block_count(g.vertex_count(), 0);
  for (const auto& b : out.blocks)
    for (VertexId v : b.vertices) ++block_count[v];
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (block_count[v] >= 2) out.articulation_vertices.push_back(v);

  // Inner blocks: prune the block-cutpoint forest down to the smallest
  // subtrees spanning the unbalanced blocks.
  const int nb = static_cast<int>(out.blocks.size());
  const int nodes = nb + g.vertex_count();
  std::vector<std::vector<int>> adj(nodes);
  for (int b = 0; b < nb; ++b) {
    for (VertexId v : out.blocks[b].vertices) {
      if (block_count[v] < 2) continue;
      adj[b].push_back(nb + v);
      adj[nb + v].push_back(b);
    }
  }
  std::vector<int> degree(nodes);
  std::vector<bool> removed(nodes, false);
  std::deque<int> leaves;
  auto prunable = [&](int node) { return node >= nb || out.blocks[node].balanced; };
  for (int x = 0; x < nodes; ++x) {
    if (x >= nb && block_count[x - nb] < 2) {
      removed[x] = true;
      continue;
    }
    degree[x] = static_cast<int>(adj[x].size());
    if (degree[x] <= 1 && prunable(x)) leaves.push_back(x);
  }
  while (!leaves.empty()) {
    const int x = leaves.front();
    leaves.pop_front();
    if (removed[x]) continue;
    removed[x] = true;
    for (int y : adj[x]) {
      if (removed[y]) continue;
      if (--degree[y] <= 1 && prunable(y)) leaves.push_back(y);
    }
  }
  for (int b = 0; b < nb; ++b) out.blocks[b].inner = !removed[b];

  std::map<int, Core> cores;
  for (int b = 0; b < nb; ++b) {
    if (!out.blocks[b].inner) continue;
    Core& core = cores[out.blocks[b].component];
    core.component = out.blocks[b].component;
    core.blocks.push_back(b);
    core.edges.insert(core.edges.end(), out.blocks[b].edges.begin(), out.blocks[b].edges.end());
  }
  for (auto& [component, core] : cores) {
    std::sort(core.edges.begin(), core.edges.end());
    if (core.blocks.size() == 1) core.necklace = necklace_of(g, out.blocks[core.blocks[0]].edges);
    out.cores.push_back(std::move(core));
  }
  return out;
}

std::vector<VertexId> articulation_vertices(const SignedGraph& g) {
  return block_decomposition(g).articulation_vertices;
}

std::vector<EdgeId> isthmi(const SignedGraph& g) {
  std::vector<EdgeId> out;
  for (const auto& b : biconnected_edge_sets(Subgraph(g)))
    if (b.size() == 1) out.push_back(b.front());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Necklace> detect_necklace(const SignedGraph& g, std::span<const EdgeId> block) {
  std::vector<EdgeId> wanted(block.begin(), block.end());
  for (EdgeId e : wanted) g.check_edge(e);
  std::sort(wanted.begin(), wanted.end());
  const auto decomposition = block_decomposition(g);
  for (const auto& b : decomposition.blocks)
    if (!b.edges.empty() && b.edges == wanted) return necklace_of(g, b.edges);
  throw NotABlock("edge set is not a block of the graph");
}

namespace {

bool is_cycle_block(const Block& b) {
  return b.is_loop() || (b.edges.size() >= 2 && b.edges.size() == b.vertices.size());
}

}  // namespace

bool is_cactus_forest(const SignedGraph& g) {
  for (const auto& b : block_decomposition(g).blocks) {
    if (b.edges.size() <= 1) continue;
    if (!is_cycle_block(b)) return false;
  }
  return true;
}

bool is_contrabalanced(const SignedGraph& g) {
  for (const auto& b : block_decomposition(g).blocks) {
    if (b.edges.empty()) continue;
    if (b.edges.size() == 1 && !b.is_loop()) continue;
    if (!is_cycle_block(b)) return false;
    if (product(g, b.edges) == Sign::Positive) return false;
  }
  return true;
}

namespace {

/// Shortest path from `from` to the first vertex satisfying `stop`, inside
/// `h`. Returns the edges in order and the vertex reached.
std::optional<std::pair<std::vector<EdgeId>, VertexId>> bfs_path(
    const Subgraph& h, VertexId from, const std::function<bool(VertexId)>& stop) {
  const SignedGraph& g = h.graph();
  std::vector<EdgeId> via(g.vertex_count(), -1);
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<VertexId> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    if (v != from && stop(v)) {
      std::vector<EdgeId> path;
      for (VertexId at = v; at != from;) {
        path.push_back(via[at]);
        at = g.edge(via[at]).other(at);
      }
      std::reverse(path.begin(), path.end());
      return std::make_pair(path, v);
    }
    for (EdgeId id : g.incident_edges(v)) {
      if (!h.has_edge(id)) continue;
      const VertexId w = g.edge(id).other(v);
      if (seen[w]) continue;
      seen[w] = true;
      via[w] = id;
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

Theta theta_in_block(const SignedGraph& g, const Block& b) {
  // A cycle through the block's first edge.
  const Edge& first = g.edge(b.edges.front());
  Subgraph block(g, b.edges, false);
  Subgraph rest(block);
  rest.remove_edge(first.id);
  auto back = bfs_path(rest, first.v, [&](VertexId v) { return v == first.u; });
  std::vector<EdgeId> cycle_edges{first.id};
  cycle_edges.insert(cycle_edges.end(), back->first.begin(), back->first.end());
  // Cycle vertex sequence c[0]=first.u, c[1]=first.v, ... back to first.u.
  std::vector<VertexId> cycle_vertices{first.u};
  for (EdgeId id : cycle_edges) cycle_vertices.push_back(g.edge(id).other(cycle_vertices.back()));
  cycle_vertices.pop_back();
  std::vector<bool> on_cycle(g.vertex_count(), false);
  for (VertexId v : cycle_vertices) on_cycle[v] = true;
  std::set<EdgeId> in_cycle(cycle_edges.begin(), cycle_edges.end());

  VertexId a = -1, z = -1;
  std::vector<EdgeId> ear;
  for (EdgeId id : b.edges) {
    if (in_cycle.count(id)) continue;
    const Edge& e = g.edge(id);
    if (!on_cycle[e.u] && !on_cycle[e.v]) continue;
    a = on_cycle[e.u] ? e.u : e.v;
    const VertexId w = e.other(a);
    ear = {id};
    if (on_cycle[w]) {
      z = w;
    } else {
      Subgraph avoid(block);
      avoid.remove_vertex(a);
      avoid.remove_edge(id);
      auto path = bfs_path(avoid, w, [&](VertexId v) { return on_cycle[v]; });
      ear.insert(ear.end(), path->first.begin(), path->first.end());
      z = path->second;
    }
    break;
  }

  // Split the cycle into its two arcs from a to z.
  const int len = static_cast<int>(cycle_vertices.size());
  const int ia = static_cast<int>(std::find(cycle_vertices.begin(), cycle_vertices.end(), a) -
                                  cycle_vertices.begin());
  std::vector<EdgeId> forward, backward;
  for (int i = ia; cycle_vertices[i % len] != z || i == ia; ++i) forward.push_back(cycle_edges[i % len]);
  for (int i = ia - 1 + len; cycle_vertices[(i + 1) % len] != z; --i)
    backward.push_back(cycle_edges[i % len]);
  Theta t{a, z, {ear, forward, backward}};
  std::sort(t.chains.begin(), t.chains.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return t;
}

}  // namespace

std::optional<Theta> contains_theta(const SignedGraph& g) {
  for (const auto& b : block_decomposition(g).blocks) {
    if (b.edges.size() <= 1 || is_cycle_block(b)) continue;
    return theta_in_block(g, b);
  }
  return std::nullopt;
}

HypercyclicVerdict classify_hypercyclic(const SignedGraph& g, const Walk& w) {
  const auto sequence = walk_vertices(g, w);
  const VertexId x = sequence.front();
  const VertexId y = sequence.back();
  HypercyclicVerdict verdict;
  auto reject = [&](std::string why) {
    verdict.type = HypercyclicType::NotHypercyclic;
    verdict.reason = std::move(why);
    return verdict;
  };

  std::vector<EdgeId> edges = w.edge_ids();
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  const auto vertices = vertices_of(g, edges);
  if (edges.empty()) return reject("contains no cycle");
  const int cyclomatic = static_cast<int>(edges.size()) - static_cast<int>(vertices.size()) + 1;
  if (cyclomatic == 0) return reject("contains no cycle");
  if (cyclomatic >= 2) return reject("contains more than one cycle");

  // Strip pendant vertices to expose the unique cycle.
  const Subgraph graph_of_walk(g, edges, false);
  std::vector<int> degree(g.vertex_count(), 0);
  for (EdgeId id : edges) {
    ++degree[g.edge(id).u];
    ++degree[g.edge(id).v];
  }
  for (VertexId v : vertices)
    if (degree[v] == 1 && v != x && v != y) return reject("not elementary: detour to a pendant vertex");

  std::set<EdgeId> tree_edges;
  {
    std::vector<int> d = degree;
    std::deque<VertexId> leaves;
    std::vector<bool> gone(g.vertex_count(), false);
    for (VertexId v : vertices)
      if (d[v] == 1) leaves.push_back(v);
    while (!leaves.empty()) {
      const VertexId v = leaves.front();
      leaves.pop_front();
      gone[v] = true;
      for (EdgeId id : g.incident_edges(v)) {
        if (!graph_of_walk.has_edge(id) || tree_edges.count(id)) continue;
        tree_edges.insert(id);
        const VertexId u = g.edge(id).other(v);
        if (--d[u] == 1 && !gone[u]) leaves.push_back(u);
      }
    }
  }
  for (EdgeId id : edges)
    if (!tree_edges.count(id)) verdict.cycle.push_back(id);
  if (product(g, verdict.cycle) == Sign::Positive) return reject("its cycle is positive");

  std::vector<bool> on_cycle(g.vertex_count(), false);
  for (VertexId v : vertices_of(g, verdict.cycle)) on_cycle[v] = true;
  std::vector<EdgeId> tree(tree_edges.begin(), tree_edges.end());
  const Subgraph forest(g, tree, false);
  auto arm = [&](VertexId from) -> std::pair<std::vector<EdgeId>, VertexId> {
    if (on_cycle[from]) return {{}, from};
    auto path = bfs_path(forest, from, [&](VertexId v) { return on_cycle[v]; });
    return *path;
  };
  auto [arm_x, tx] = arm(x);
  auto [arm_y, ty] = arm(y);
  if (tx != ty) return reject("not elementary: the arms meet the cycle at different vertices");

  const Sign arms = product(g, arm_x) * product(g, arm_y);
  if (walk_sign(g, w) == arms) {
    return reject("not elementary: the arms alone give a chain of the same sign");
  }
  if (w.length() != verdict.cycle.size() + arm_x.size() + arm_y.size()) {
    return reject("not elementary: some edge is traversed more often than needed");
  }

  verdict.arm_x = arm_x;
  verdict.arm_y = arm_y;
  verdict.attachment = tx;
  // Common terminal segment of the two arms.
  auto ix = arm_x.rbegin();
  auto iy = arm_y.rbegin();
  while (ix != arm_x.rend() && iy != arm_y.rend() && *ix == *iy) {
    verdict.shared.insert(verdict.shared.begin(), *ix);
    ++ix;
    ++iy;
  }
  verdict.type = verdict.shared.empty() ? HypercyclicType::DisjointArms : HypercyclicType::SharedArm;
  return verdict;
}

}  // namespace signcon
