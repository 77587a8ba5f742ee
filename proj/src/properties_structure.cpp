#include <algorithm>
#include <set>

#include "property_util.hpp"
#include "signcon/matroid.hpp"
#include "signcon/sign_connectivity.hpp"

namespace signcon::verify::detail {
namespace {

Outcome blocks_consistent(GraphFacts& f) {
  const auto& d = f.blocks();
  std::vector<int> owner(f.m, -1);
  for (int b = 0; b < static_cast<int>(d.blocks.size()); ++b) {
    for (EdgeId e : d.blocks[b].edges) {
      if (owner[e] >= 0) return Outcome::violated("edge " + std::to_string(e) + " in two blocks");
      owner[e] = b;
    }
  }
  for (EdgeId e = 0; e < f.m; ++e)
    if (owner[e] < 0) return Outcome::violated("edge " + std::to_string(e) + " in no block");
  // Two distinct non-loop edges share a block iff some cycle holds both.
  for (EdgeId e = 0; e < f.m; ++e) {
    for (EdgeId h = e + 1; h < f.m; ++h) {
      if (f.g.edge(e).is_loop() || f.g.edge(h).is_loop()) continue;
      const bool together = std::any_of(f.cycles().begin(), f.cycles().end(), [&](const auto& c) {
        return has(c.edges, e) && has(c.edges, h);
      });
      if (together != (owner[e] == owner[h])) {
        return Outcome::violated("edges " + std::to_string(e) + "," + std::to_string(h));
      }
    }
  }
  for (std::size_t a = 0; a < d.blocks.size(); ++a) {
    for (std::size_t b = a + 1; b < d.blocks.size(); ++b) {
      std::vector<VertexId> common;
      std::set_intersection(d.blocks[a].vertices.begin(), d.blocks[a].vertices.end(),
                            d.blocks[b].vertices.begin(), d.blocks[b].vertices.end(),
                            std::back_inserter(common));
      if (common.size() > 1) return Outcome::violated("blocks share " + show(common));
    }
    const auto& block = d.blocks[a];
    const bool negative = std::any_of(f.cycles().begin(), f.cycles().end(), [&](const auto& c) {
      return c.sign == Sign::Negative && subset(c.edges, block.edges);
    });
    if (block.balanced == negative) return Outcome::violated("balance flag of block " + show(block.edges));
  }
  for (const auto& core : d.cores) {
    if (!core.necklace) continue;
    std::vector<EdgeId> all;
    for (const auto& c : *core.necklace) {
      all.insert(all.end(), c.begin(), c.end());
      const bool negative = std::any_of(f.cycles().begin(), f.cycles().end(), [&](const auto& cy) {
        return cy.sign == Sign::Negative && subset(cy.edges, c);
      });
      if (negative) return Outcome::violated("unbalanced constituent " + show(c));
    }
    std::sort(all.begin(), all.end());
    if (all != core.edges || core.necklace->size() < 2) return Outcome::violated("necklace of " + show(core.edges));
  }
  return Outcome::holds();
}

bool no_positive_cycle(GraphFacts& f) {
  return std::none_of(f.cycles().begin(), f.cycles().end(),
                      [](const auto& c) { return c.sign == Sign::Positive; });
}

Outcome contrabalance(GraphFacts& f) {
  const bool expected = no_positive_cycle(f);
  if (is_contrabalanced(f.g) != expected) return Outcome::violated("is_contrabalanced disagrees with cycles");
  // Cactus: no edge on two cycles.
  std::vector<int> uses(f.m, 0);
  for (const auto& c : f.cycles())
    for (EdgeId e : c.edges) ++uses[e];
  const bool cactus = std::all_of(uses.begin(), uses.end(), [](int u) { return u <= 1; });
  if (is_cactus_forest(f.g) != cactus) return Outcome::violated("is_cactus_forest disagrees with cycles");
  const bool negative_cycles = std::all_of(f.cycles().begin(), f.cycles().end(),
                                           [](const auto& c) { return c.sign == Sign::Negative; });
  if ((cactus && negative_cycles) != expected) return Outcome::violated("cactus criterion");
  return Outcome::holds();
}

Outcome theta_parity(GraphFacts& f) {
  const auto t = contains_theta(f.g);
  if (t.has_value() == is_cactus_forest(f.g)) return Outcome::violated("theta presence disagrees with cactus");
  if (!t) return Outcome::na();
  std::set<VertexId> inner;
  for (const auto& chain : t->chains) {
    if (chain.empty()) return Outcome::violated("empty chain");
    const auto w = make_walk(f.g, t->a, chain);
    if (walk_end(f.g, w) != t->b) return Outcome::violated("chain does not reach b");
    const auto vs = walk_vertices(f.g, w);
    for (std::size_t i = 1; i + 1 < vs.size(); ++i)
      if (!inner.insert(vs[i]).second || vs[i] == t->a || vs[i] == t->b)
        return Outcome::violated("chains not internally disjoint");
  }
  int positive = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      Sign s = Sign::Positive;
      for (EdgeId e : t->chains[i]) s = s * f.g.edge(e).sign;
      for (EdgeId e : t->chains[j]) s = s * f.g.edge(e).sign;
      if (s == Sign::Positive) ++positive;
    }
  }
  if (positive % 2 == 0) return Outcome::violated(std::to_string(positive) + " positive cycles");
  return Outcome::holds();
}

bool has_pendant_edge(const SignedGraph& g) {
  for (const Edge& e : g.edges())
    if (!e.is_loop() && (g.degree(e.u) == 1 || g.degree(e.v) == 1)) return true;
  return false;
}

Outcome contrabalanced_sign_connection(GraphFacts& f) {
  if (!f.connected() || f.n < 2 || !no_positive_cycle(f)) return Outcome::na();
  const auto cycles = f.cycles().size();
  if (f.sign_connected() != (cycles > 0)) return Outcome::violated("sign connected iff a cycle");
  if (cycles == 1 && f.sign_isthmi() != all_edges(f.g)) return Outcome::violated("one cycle, not all sign isthmi");
  if (cycles >= 2 && f.sign_isthmi() != f.isthmi()) return Outcome::violated("sign isthmi differ from isthmi");
  return Outcome::holds();
}

Outcome contrabalanced_frame(GraphFacts& f) {
  if (!f.connected() || f.m < 2 || !no_positive_cycle(f)) return Outcome::na();
  const bool a = is_frame_connected(f.g);
  const bool b = f.frame_isthmi().empty();
  const bool c = f.cycles().size() >= 2 && !has_pendant_edge(f.g);
  if (a != b || b != c) {
    return Outcome::violated(std::string("connected=") + (a ? "T" : "F") + " no-isthmi=" + (b ? "T" : "F") +
                             " cycles-no-pendant=" + (c ? "T" : "F"));
  }
  return Outcome::holds();
}

Outcome contrabalanced_frame_otherwise(GraphFacts& f) {
  if (!f.connected() || f.m < 2 || !no_positive_cycle(f)) return Outcome::na();
  if (f.cycles().size() >= 2 && !has_pendant_edge(f.g)) return Outcome::na();
  if (f.frame_isthmi() != all_edges(f.g)) return Outcome::violated("frame isthmi " + show(f.frame_isthmi()));
  return Outcome::holds();
}

Outcome contrabalanced_lift(GraphFacts& f) {
  if (f.m < 2 || !no_positive_cycle(f) || !isolated_vertices(f.g).empty()) return Outcome::na();
  const bool a = is_lift_connected(f.g);
  const bool b = f.lift_isthmi().empty();
  const bool c = f.cycles().size() >= 2 && f.isthmi().empty();
  if (a != b || b != c) {
    return Outcome::violated(std::string("connected=") + (a ? "T" : "F") + " no-isthmi=" + (b ? "T" : "F") +
                             " cycles-no-isthmus=" + (c ? "T" : "F"));
  }
  if (f.cycles().size() < 2 && f.lift_isthmi() != all_edges(f.g)) {
    return Outcome::violated("fewer than two cycles, lift isthmi " + show(f.lift_isthmi()));
  }
  return Outcome::holds();
}

Outcome hypercyclic_shapes(GraphFacts& f) {
  if (f.m > 3) return Outcome::na();
  oracle::EnumerationBudget b = f.budget;
  b.max_chain_length = 4;
  bool all_negative = true;
  for (const Edge& e : f.g.edges()) all_negative = all_negative && e.sign == Sign::Negative;
  for (VertexId x = 0; x < f.n; ++x) {
    for (VertexId y = 0; y < f.n; ++y) {
      const auto chains = oracle::enumerate_chains(f.g, x, y, b);
      for (const auto* list : {&chains.positive, &chains.negative}) {
        for (const auto& w : *list) {
          auto used = w.edge_ids();
          std::sort(used.begin(), used.end());
          used.erase(std::unique(used.begin(), used.end()), used.end());
          const bool negative_cycle = std::any_of(f.cycles().begin(), f.cycles().end(), [&](const auto& c) {
            return c.sign == Sign::Negative && subset(c.edges, used);
          });
          const bool expected = negative_cycle && oracle::elementarity(f.g, w, b).elementary();
          const auto v = classify_hypercyclic(f.g, w);
          const bool accepted = v.type != HypercyclicType::NotHypercyclic;
          if (accepted != expected) {
            return Outcome::violated("walk from " + std::to_string(x) + " over " + show(w.edge_ids()) +
                                     (accepted ? " accepted" : " rejected: " + v.reason));
          }
          if (accepted && all_negative && v.cycle.size() % 2 == 0) {
            return Outcome::violated("even cycle accepted in an all-negative graph");
          }
        }
      }
    }
  }
  return Outcome::holds();
}

Outcome hypercyclic_witnesses(GraphFacts& f) {
  if (!f.sign_connected() || f.n < 2) return Outcome::na();
  bool any = false;
  for (VertexId x = 0; x < f.n; ++x) {
    for (VertexId y = 0; y < f.n; ++y) {
      const auto pair = witness_chains(f.g, x, y);
      for (const Walk* w : {&pair.positive, &pair.negative}) {
        if (walk_end(f.g, *w) != y || w->start != x) return Outcome::violated("witness has wrong ends");
        if (walk_sign(f.g, *w) != (w == &pair.positive ? Sign::Positive : Sign::Negative))
          return Outcome::violated("witness has wrong sign");
        if (classify_hypercyclic(f.g, *w).type == HypercyclicType::NotHypercyclic) continue;
        any = true;
        const auto used = w->edge_ids();
        if (!is_sign_connected(Subgraph(f.g, used, false)))
          return Outcome::violated("hypercyclic witness " + show(used) + " not sign connected");
      }
    }
  }
  return any ? Outcome::holds() : Outcome::na();
}

}  // namespace

void add_structure_properties(std::vector<Property>& out) {
  out.push_back({"structure.blocks", 0, "blocks partition the edges, meet in at most one vertex, carry correct balance",
                 blocks_consistent});
  out.push_back({"structure.contrabalance", 6, "no positive cycle iff cactus forest with negative cycles",
                 contrabalance});
  out.push_back({"structure.theta", 6, "a theta exists iff not a cactus, and has an odd number of positive cycles",
                 theta_parity});
  out.push_back({"structure.contrabalanced-sign", 6,
                 "connected contrabalanced: sign connected iff a cycle; sign isthmi by cycle count",
                 contrabalanced_sign_connection});
  out.push_back({"structure.contrabalanced-frame", 6,
                 "connected contrabalanced: frame connected iff no frame isthmus iff two cycles and no pendant edge",
                 contrabalanced_frame});
  out.push_back({"structure.contrabalanced-frame-otherwise", 0,
                 "connected contrabalanced failing the frame condition: every edge is a frame isthmus",
                 contrabalanced_frame_otherwise});
  out.push_back({"structure.contrabalanced-lift", 6,
                 "contrabalanced without isolated vertex: lift connected iff no lift isthmus iff two cycles and no isthmus",
                 contrabalanced_lift});
  out.push_back({"structure.hypercyclic", 0, "hypercyclic shapes are exactly the elementary chains over a negative cycle",
                 hypercyclic_shapes});
  out.push_back({"structure.hypercyclic-witness", 0, "hypercyclic witness chains are sign connected",
                 hypercyclic_witnesses});
}

}  // namespace signcon::verify::detail
