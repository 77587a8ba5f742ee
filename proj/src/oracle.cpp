#include "signcon/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace signcon::oracle {
namespace {

using Mask = std::uint64_t;

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

void check_subsets(std::size_t bits, const EnumerationBudget& budget, const char* what) {
  if (bits >= 63 || (std::size_t{1} << bits) > budget.max_subsets) {
    throw BudgetExceeded(std::string(what) + ": 2^" + std::to_string(bits) +
                         " subsets exceed the budget of " + std::to_string(budget.max_subsets));
  }
}

Mask to_mask(std::span<const EdgeId> edges) {
  Mask m = 0;
  for (EdgeId e : edges) m |= Mask{1} << e;
  return m;
}

std::vector<EdgeId> to_edges(Mask m) {
  std::vector<EdgeId> out;
  for (int e = 0; m; ++e, m >>= 1)
    if (m & 1) out.push_back(e);
  return out;
}

Sign mask_sign(const SignedGraph& g, Mask m) {
  int negatives = 0;
  for (EdgeId e : to_edges(m))
    if (g.edge(e).sign == Sign::Negative) ++negatives;
  return negatives % 2 ? Sign::Negative : Sign::Positive;
}

std::vector<int> degrees(const SignedGraph& g, Mask m) {
  std::vector<int> d(g.vertex_count(), 0);
  for (EdgeId e : to_edges(m)) {
    ++d[g.edge(e).u];
    ++d[g.edge(e).v];
  }
  return d;
}

Mask vertex_mask(const SignedGraph& g, Mask m) {
  Mask out = 0;
  for (EdgeId e : to_edges(m)) out |= (Mask{1} << g.edge(e).u) | (Mask{1} << g.edge(e).v);
  return out;
}

/// Edges of m are connected (their vertices form one class).
bool connected_edges(const SignedGraph& g, Mask m) {
  UnionFind uf(g.vertex_count());
  for (EdgeId e : to_edges(m)) uf.unite(g.edge(e).u, g.edge(e).v);
  int root = -1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!(vertex_mask(g, m) >> v & 1)) continue;
    if (root < 0) root = uf.find(v);
    if (uf.find(v) != root) return false;
  }
  return true;
}

bool is_cycle_mask(const SignedGraph& g, Mask m) {
  if (!m) return false;
  const auto d = degrees(g, m);
  for (int x : d)
    if (x != 0 && x != 2) return false;
  return connected_edges(g, m);
}

std::vector<Mask> cycle_masks(const SignedGraph& g, const EnumerationBudget& budget) {
  const int m = g.edge_count();
  check_subsets(m, budget, "cycle enumeration");
  std::vector<Mask> out;
  for (Mask s = 1; s < (Mask{1} << m); ++s) {
    if (!is_cycle_mask(g, s)) continue;
    out.push_back(s);
    if (out.size() > budget.max_cycles) throw BudgetExceeded("cycle enumeration exceeds the budget");
  }
  return out;
}

/// S is a path with one end in a, the other in b, and no other vertex in a or b.
bool is_connecting_path(const SignedGraph& g, Mask s, Mask va, Mask vb) {
  for (EdgeId e : to_edges(s))
    if (g.edge(e).is_loop()) return false;
  const auto d = degrees(g, s);
  int ends_a = 0, ends_b = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (d[v] == 0) continue;
    const bool in_a = va >> v & 1;
    const bool in_b = vb >> v & 1;
    if (d[v] == 1) {
      if (in_a) ++ends_a;
      else if (in_b) ++ends_b;
      else return false;
    } else if (d[v] != 2 || in_a || in_b) {
      return false;
    }
  }
  return ends_a == 1 && ends_b == 1 && connected_edges(g, s);
}

std::vector<Circuit> sorted_circuits(const std::set<Mask>& masks) {
  std::vector<Circuit> out;
  for (Mask m : masks) out.push_back(to_edges(m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Circuit> circuits(const SignedGraph& g, const EnumerationBudget& budget, bool frame) {
  const auto cycles = cycle_masks(g, budget);
  std::vector<Mask> negative;
  std::set<Mask> out;
  for (Mask c : cycles) {
    if (mask_sign(g, c) == Sign::Positive) out.insert(c);
    else negative.push_back(c);
  }
  const Mask all = g.edge_count() == 0 ? 0 : (Mask{1} << g.edge_count()) - 1;
  for (std::size_t i = 0; i < negative.size(); ++i) {
    for (std::size_t j = i + 1; j < negative.size(); ++j) {
      const Mask a = negative[i], b = negative[j];
      if (a & b) continue;
      const Mask va = vertex_mask(g, a), vb = vertex_mask(g, b);
      const int common = std::popcount(va & vb);
      if (common == 1) {
        out.insert(a | b);
      } else if (common == 0) {
        if (!frame) {
          out.insert(a | b);
          continue;
        }
        const Mask rest = all & ~(a | b);
        check_subsets(std::popcount(rest), budget, "connecting paths");
        for (Mask s = rest; s; s = (s - 1) & rest)
          if (is_connecting_path(g, s, va, vb)) out.insert(a | b | s);
      }
    }
  }
  return sorted_circuits(out);
}

}  // namespace

std::vector<SignedEdgeSet> enumerate_elementary_cycles(const SignedGraph& g,
                                                       const EnumerationBudget& budget) {
  std::vector<SignedEdgeSet> out;
  for (Mask c : cycle_masks(g, budget)) out.push_back({to_edges(c), mask_sign(g, c)});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.edges < b.edges; });
  return out;
}

ChainSet enumerate_chains(const SignedGraph& g, VertexId x, VertexId y,
                          const EnumerationBudget& budget) {
  g.check_vertex(x);
  g.check_vertex(y);
  ChainSet out;
  std::size_t walks = 0;
  Walk current{x, {}};
  auto visit = [&](auto&& self, VertexId at, Sign sign) -> void {
    if (++walks > budget.max_walks) throw BudgetExceeded("walk enumeration exceeds the budget");
    if (at == y) (sign == Sign::Positive ? out.positive : out.negative).push_back(current);
    if (current.steps.size() >= budget.max_chain_length) return;
    for (const Edge& e : g.edges()) {
      // A loop is traversed in its forward direction only.
      if (e.u == at) {
        current.steps.push_back({e.id, true});
        self(self, e.v, sign * e.sign);
        current.steps.pop_back();
      }
      if (e.v == at && !e.is_loop()) {
        current.steps.push_back({e.id, false});
        self(self, e.u, sign * e.sign);
        current.steps.pop_back();
      }
    }
  };
  visit(visit, x, Sign::Positive);
  return out;
}

std::vector<SignSet> reachable_signs(const SignedGraph& g, VertexId x) {
  g.check_vertex(x);
  const int n = g.vertex_count();
  std::vector<SignSet> layer(n), all(n);
  layer[x].insert(Sign::Positive);
  all[x].insert(Sign::Positive);
  for (int len = 1; len <= 2 * n; ++len) {
    std::vector<SignSet> next(n);
    for (const Edge& e : g.edges()) {
      for (Sign s : {Sign::Positive, Sign::Negative}) {
        if (layer[e.u].contains(s)) next[e.v].insert(s * e.sign);
        if (layer[e.v].contains(s)) next[e.u].insert(s * e.sign);
      }
    }
    layer = std::move(next);
    for (int v = 0; v < n; ++v) {
      if (layer[v].positive) all[v].insert(Sign::Positive);
      if (layer[v].negative) all[v].insert(Sign::Negative);
    }
  }
  return all;
}

std::vector<Circuit> enumerate_frame_circuits(const SignedGraph& g, const EnumerationBudget& budget) {
  return circuits(g, budget, true);
}

std::vector<Circuit> enumerate_lift_circuits(const SignedGraph& g, const EnumerationBudget& budget) {
  return circuits(g, budget, false);
}

int rank_from_circuits(std::span<const Circuit> circuits, std::span<const EdgeId> F,
                       const EnumerationBudget& budget) {
  std::vector<EdgeId> f(F.begin(), F.end());
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  check_subsets(f.size(), budget, "rank from circuits");
  std::vector<Mask> cs;
  for (const auto& c : circuits) cs.push_back(to_mask(c));
  int best = 0;
  for (Mask local = 0; local < (Mask{1} << f.size()); ++local) {
    const int size = std::popcount(local);
    if (size <= best) continue;
    Mask s = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (local >> i & 1) s |= Mask{1} << f[i];
    if (std::none_of(cs.begin(), cs.end(), [&](Mask c) { return (c & s) == c; })) best = size;
  }
  return best;
}

std::vector<int> circuit_rank_table(std::span<const Circuit> circuits, int m,
                                    const EnumerationBudget& budget) {
  check_subsets(m, budget, "rank table");
  std::vector<Mask> cs;
  for (const auto& c : circuits) cs.push_back(to_mask(c));
  std::vector<int> rank(std::size_t{1} << m, 0);
  for (Mask s = 1; s < (Mask{1} << m); ++s) {
    if (std::none_of(cs.begin(), cs.end(), [&](Mask c) { return (c & s) == c; })) {
      rank[s] = std::popcount(s);
      continue;
    }
    for (int e = 0; e < m; ++e)
      if (s >> e & 1) rank[s] = std::max(rank[s], rank[s & ~(Mask{1} << e)]);
  }
  return rank;
}

std::vector<std::vector<EdgeId>> circuit_components(std::span<const Circuit> circuits, int m) {
  UnionFind uf(m);
  for (const auto& c : circuits)
    for (EdgeId e : c) uf.unite(c.front(), e);
  std::map<int, std::vector<EdgeId>> classes;
  for (EdgeId e = 0; e < m; ++e) classes[uf.find(e)].push_back(e);
  std::vector<std::vector<EdgeId>> out;
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<VertexId>> connected_classes(const SignedGraph& g) {
  UnionFind uf(g.vertex_count());
  for (const Edge& e : g.edges()) uf.unite(e.u, e.v);
  std::map<int, std::vector<VertexId>> classes;
  for (VertexId v = 0; v < g.vertex_count(); ++v) classes[uf.find(v)].push_back(v);
  std::vector<std::vector<VertexId>> out;
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

bool balanced(const SignedGraph& g, const EnumerationBudget& budget) {
  for (Mask c : cycle_masks(g, budget))
    if (mask_sign(g, c) == Sign::Negative) return false;
  return true;
}

bool bipartite(const SignedGraph& g) {
  std::vector<int> colour(g.vertex_count(), -1);
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::deque<VertexId> queue{s};
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (const Edge& e : g.edges()) {
        if (e.u != v && e.v != v) continue;
        const VertexId w = e.u == v ? e.v : e.u;
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

template <typename Related>
RelationClasses close_relation(int n, Related related) {
  UnionFind uf(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (related(a, b)) uf.unite(a, b);
  std::map<int, std::vector<VertexId>> classes;
  for (VertexId v = 0; v < n; ++v) classes[uf.find(v)].push_back(v);
  RelationClasses out;
  for (auto& [root, members] : classes) {
    for (VertexId a : members)
      for (VertexId b : members)
        if (!related(a, b)) out.pairwise = false;
    out.classes.push_back(std::move(members));
  }
  std::sort(out.classes.begin(), out.classes.end());
  return out;
}

std::vector<std::vector<SignSet>> reach_table(const SignedGraph& g) {
  std::vector<std::vector<SignSet>> table;
  for (VertexId x = 0; x < g.vertex_count(); ++x) table.push_back(reachable_signs(g, x));
  return table;
}

}  // namespace

RelationClasses positive_relation(const SignedGraph& g) {
  const auto r = reach_table(g);
  return close_relation(g.vertex_count(), [&](int a, int b) { return r[a][b].positive; });
}

RelationClasses negative_relation(const SignedGraph& g) {
  const auto r = reach_table(g);
  const int n = g.vertex_count();
  return close_relation(n, [&](int a, int b) {
    if (r[a][b].negative) return true;
    for (int w = 0; w < n; ++w)
      if (r[a][w].negative && r[b][w].negative) return true;
    return false;
  });
}

RelationClasses sign_relation(const SignedGraph& g) {
  const auto r = reach_table(g);
  return close_relation(g.vertex_count(), [&](int a, int b) { return a == b || r[a][b].both(); });
}

Elementarity elementarity(const SignedGraph& g, const Walk& w, const EnumerationBudget& budget) {
  g.check_vertex(w.start);
  // Replay the walk to learn its end, edges and sign.
  VertexId at = w.start;
  Sign sign = Sign::Positive;
  std::vector<EdgeId> used;
  for (const Step& s : w.steps) {
    g.check_edge(s.edge);
    const Edge& e = g.edge(s.edge);
    const VertexId from = s.forward ? e.u : e.v;
    if (from != at) throw InvalidWalk("step does not continue the walk");
    at = s.forward ? e.v : e.u;
    sign = sign * e.sign;
    used.push_back(s.edge);
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  const int k = static_cast<int>(used.size());
  check_subsets(k + 1 + std::bit_width(static_cast<unsigned>(g.vertex_count())), budget,
                "elementarity states");

  // dist over states (vertex, subset of used, sign).
  const Mask full = (Mask{1} << k) - 1;
  auto index = [&](VertexId v, Mask s, Sign e) {
    return ((static_cast<std::size_t>(v) << k | s) << 1) | (e == Sign::Negative ? 1 : 0);
  };
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()) << (k + 1), -1);
  std::deque<std::tuple<VertexId, Mask, Sign>> queue{{w.start, 0, Sign::Positive}};
  dist[index(w.start, 0, Sign::Positive)] = 0;
  while (!queue.empty()) {
    const auto [v, s, e] = queue.front();
    queue.pop_front();
    const int d = dist[index(v, s, e)];
    for (int i = 0; i < k; ++i) {
      const Edge& edge = g.edge(used[i]);
      for (int dir = 0; dir < 2; ++dir) {
        const VertexId from = dir == 0 ? edge.u : edge.v;
        const VertexId to = dir == 0 ? edge.v : edge.u;
        if (from != v) continue;
        const Mask ns = s | (Mask{1} << i);
        const Sign ne = e * edge.sign;
        const auto idx = index(to, ns, ne);
        if (dist[idx] >= 0) continue;
        dist[idx] = d + 1;
        queue.emplace_back(to, ns, ne);
      }
    }
  }
  Elementarity out;
  out.minimal_edges = true;
  for (Mask s = 0; s < full; ++s)
    if ((s & full) == s && dist[index(at, s, sign)] >= 0) out.minimal_edges = false;
  const int shortest = dist[index(at, full, sign)];
  out.minimal_length = shortest == static_cast<int>(w.steps.size());
  return out;
}

}  // namespace signcon::oracle
