#include <algorithm>

#include "property_util.hpp"
#include "signcon/balance.hpp"
#include "signcon/matroid.hpp"
#include "signcon/sign_connectivity.hpp"

namespace signcon::verify::detail {

bool side_unbalanced(GraphFacts& f, const std::vector<VertexId>& side, EdgeId removed) {
  const auto& cs = f.cycles();
  const auto& vs = f.cycle_vertices();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].sign == Sign::Positive || has(cs[i].edges, removed)) continue;
    if (subset(vs[i], side)) return true;
  }
  return false;
}

bool side_sign_connected(GraphFacts& f, const std::vector<VertexId>& side, EdgeId removed) {
  return side.size() == 1 || side_unbalanced(f, side, removed);
}

namespace {

Outcome switching_involution(GraphFacts& f) {
  for (unsigned w = 0; w < (1u << f.n); ++w) {
    const auto set = edges_of(w);
    const auto once = switched(f.g, set);
    if (!(switched(once, set) == f.g)) return Outcome::violated("W=" + show(set));
    for (const auto& c : f.cycles()) {
      Sign s = Sign::Positive;
      for (EdgeId e : c.edges) s = s * once.edge(e).sign;
      if (s != c.sign) return Outcome::violated("cycle " + show(c.edges) + " changes sign, W=" + show(set));
    }
  }
  return Outcome::holds();
}

Outcome switching_balance(GraphFacts& f) {
  const bool b = is_balanced(f.g);
  for (unsigned w = 0; w < (1u << f.n); ++w)
    if (is_balanced(switched(f.g, edges_of(w))) != b) return Outcome::violated("W=" + show(edges_of(w)));
  return Outcome::holds();
}

Outcome double_cover_components(GraphFacts& f) {
  if (!f.connected()) return Outcome::na();
  const auto count = double_cover(f.g).components().size();
  if (count != (f.balanced() ? 2u : 1u)) {
    return Outcome::violated(std::to_string(count) + " cover components");
  }
  return Outcome::holds();
}

Outcome reachability(GraphFacts& f) {
  for (VertexId x = 0; x < f.n; ++x)
    if (sign_reachability(f.g, x) != f.reach()[x]) return Outcome::violated("from " + std::to_string(x));
  return Outcome::holds();
}

Outcome balance_oracle(GraphFacts& f) {
  if (is_balanced(f.g) != f.balanced()) return Outcome::violated("is_balanced disagrees");
  return Outcome::holds();
}

Outcome harary(GraphFacts& f) {
  const auto h = harary_bipartition(f.g);
  if (!f.balanced()) return h ? Outcome::violated("bipartition of an unbalanced graph") : Outcome::holds();
  if (!h) return Outcome::violated("no bipartition");
  const auto flipped = switched(f.g, h->switching_set());
  for (const Edge& e : flipped.edges())
    if (e.sign == Sign::Negative) return Outcome::violated("edge " + std::to_string(e.id) + " stays negative");
  for (const auto& part : h->parts)
    if (has(part.switched, part.component.front())) return Outcome::violated("smallest vertex switched");
  return Outcome::holds();
}

Outcome balancing_edges_oracle(GraphFacts& f) {
  std::vector<EdgeId> expected;
  for (const Edge& e : f.g.edges()) {
    const int c = f.component_of(e.u);
    if (!f.component_unbalanced(c)) continue;
    bool everywhere = true;
    for (const auto& cy : f.cycles())
      if (cy.sign == Sign::Negative && f.component_of(f.g.edge(cy.edges.front()).u) == c &&
          !has(cy.edges, e.id))
        everywhere = false;
    if (everywhere) expected.push_back(e.id);
  }
  const auto got = balancing_edges(f.g);
  if (got != expected) return Outcome::violated("got " + show(got) + ", expected " + show(expected));
  return Outcome::holds();
}

Outcome balancing_vertices_oracle(GraphFacts& f) {
  std::vector<VertexId> expected;
  for (VertexId x = 0; x < f.n; ++x) {
    const int c = f.component_of(x);
    if (!f.component_unbalanced(c)) continue;
    bool everywhere = true;
    for (std::size_t i = 0; i < f.cycles().size(); ++i) {
      const auto& cy = f.cycles()[i];
      if (cy.sign == Sign::Negative && f.component_of(f.g.edge(cy.edges.front()).u) == c &&
          !has(f.cycle_vertices()[i], x))
        everywhere = false;
    }
    if (everywhere) expected.push_back(x);
  }
  const auto got = balancing_vertices(f.g);
  if (got != expected) return Outcome::violated("got " + show(got) + ", expected " + show(expected));
  return Outcome::holds();
}

Outcome balancing_edge_conditions(GraphFacts& f) {
  if (!f.connected() || f.balanced()) return Outcome::na();
  for (EdgeId e = 0; e < f.m; ++e) {
    const auto c = check_balancing_edge_equivalences(f.g, e);
    if (!c.all_equal()) {
      std::string v;
      for (bool b : c.values()) v += b ? 'T' : 'F';
      return Outcome::violated("edge " + std::to_string(e) + ": " + v);
    }
  }
  return Outcome::holds();
}

Outcome sign_connection_criterion(GraphFacts& f) {
  const bool expected = f.n == 1 || (f.connected() && !f.balanced());
  if (is_sign_connected(f.g) != expected) {
    return Outcome::violated(std::string("is_sign_connected ") + (expected ? "false" : "true"));
  }
  return Outcome::holds();
}

Outcome sign_components_match(GraphFacts& f) {
  const auto got = sign_components(f.g).classes;
  const auto expected = oracle::sign_relation(f.g).classes;
  if (got != expected) return Outcome::violated("got " + show(got) + ", oracle " + show(expected));
  return Outcome::holds();
}

Outcome sign_relation_equivalence(GraphFacts& f) {
  return oracle::sign_relation(f.g).pairwise ? Outcome::holds()
                                             : Outcome::violated("closure adds pairs");
}

Outcome sign_isthmi_formula(GraphFacts& f) {
  if (!f.sign_connected() || f.n <= 1) return Outcome::na();
  const auto expected = united(f.isthmi(), f.balancing_edges());
  if (f.sign_isthmi() != expected) {
    return Outcome::violated("sign isthmi " + show(f.sign_isthmi()) + ", expected " + show(expected));
  }
  return Outcome::holds();
}

bool on_negative_cycle(GraphFacts& f, VertexId x) {
  for (std::size_t i = 0; i < f.cycles().size(); ++i)
    if (f.cycles()[i].sign == Sign::Negative && has(f.cycle_vertices()[i], x)) return true;
  return false;
}

Outcome sign_articulation_exactly_one(GraphFacts& f) {
  if (!f.sign_connected() || f.n <= 1) return Outcome::na();
  const auto& art = f.blocks().articulation_vertices;
  for (VertexId x : sign_articulation_vertices(f.g)) {
    if (has(art, x) == on_negative_cycle(f, x)) {
      return Outcome::violated("vertex " + std::to_string(x) +
                               (has(art, x) ? " is both" : " is neither"));
    }
  }
  return Outcome::holds();
}

Outcome sign_articulation_one_of(GraphFacts& f) {
  if (!f.sign_connected() || f.n <= 1) return Outcome::na();
  const auto& art = f.blocks().articulation_vertices;
  for (VertexId x : sign_articulation_vertices(f.g))
    if (!has(art, x) && !on_negative_cycle(f, x)) return Outcome::violated("vertex " + std::to_string(x));
  return Outcome::holds();
}

Outcome disjoint_negative_cycles(GraphFacts& f) {
  if (!f.sign_connected() || f.n <= 1) return Outcome::na();
  const auto& cs = f.cycles();
  const auto& vs = f.cycle_vertices();
  bool found = false;
  for (std::size_t i = 0; i < cs.size() && !found; ++i) {
    for (std::size_t j = i + 1; j < cs.size() && !found; ++j) {
      if (cs[i].sign == Sign::Positive || cs[j].sign == Sign::Positive) continue;
      std::vector<VertexId> common;
      std::set_intersection(vs[i].begin(), vs[i].end(), vs[j].begin(), vs[j].end(),
                            std::back_inserter(common));
      found = common.empty();
    }
  }
  if (!found) return Outcome::na();
  const auto sa = sign_articulation_vertices(f.g);
  if (!subset(sa, f.blocks().articulation_vertices)) {
    return Outcome::violated("sign articulation " + show(sa) + " not all articulation vertices");
  }
  return Outcome::holds();
}

Outcome two_unbalanced_sides(GraphFacts& f) {
  if (!f.sign_connected() || f.n <= 1) return Outcome::na();
  bool applies = false;
  for (VertexId x : f.blocks().articulation_vertices) {
    const auto rest = without_vertex(f.g, x);
    const auto comps = oracle::connected_classes(rest);
    int unbalanced = 0;
    for (const auto& c : comps) {
      // Negative cycles of g avoiding x and lying inside this class.
      std::vector<VertexId> original;
      for (VertexId v : c) original.push_back(v < x ? v : v + 1);
      for (std::size_t i = 0; i < f.cycles().size(); ++i) {
        if (f.cycles()[i].sign == Sign::Negative && subset(f.cycle_vertices()[i], original)) {
          ++unbalanced;
          break;
        }
      }
    }
    if (unbalanced >= 2) applies = true;
  }
  if (!applies) return Outcome::na();
  if (is_quasibalanced(f.g)) return Outcome::violated("reported quasibalanced");
  return Outcome::holds();
}

Outcome parity_definition(GraphFacts& f) {
  if (is_parity_connected(f.g) != is_sign_connected(all_negative(f.g))) {
    return Outcome::violated("differs from all-negative sign connection");
  }
  return Outcome::holds();
}

Outcome parity_bipartite(GraphFacts& f) {
  if (f.n < 2) return Outcome::na();
  const bool expected = f.connected() && !oracle::bipartite(f.g);
  if (is_parity_connected(f.g) != expected) {
    return Outcome::violated(std::string("is_parity_connected ") + (expected ? "false" : "true"));
  }
  return Outcome::holds();
}

Outcome positive_classes(GraphFacts& f) {
  const auto got = positive_components(f.g).classes;
  const auto expected = oracle::positive_relation(f.g).classes;
  if (got != expected) return Outcome::violated("got " + show(got) + ", oracle " + show(expected));
  return Outcome::holds();
}

Outcome negative_classes(GraphFacts& f) {
  const auto got = negative_components(f.g).classes;
  const auto expected = oracle::negative_relation(f.g).classes;
  if (got != expected) return Outcome::violated("got " + show(got) + ", oracle " + show(expected));
  return Outcome::holds();
}

}  // namespace

void add_basic_properties(std::vector<Property>& out) {
  out.push_back({"core.switching", 0, "switching twice restores g and keeps cycle signs",
                 switching_involution});
  out.push_back({"core.double-cover", 0, "a connected graph has a 2-sheeted cover in 2 pieces iff balanced",
                 double_cover_components});
  out.push_back({"core.reachability", 0, "double-cover reachability equals walk-length DP",
                 reachability});
  out.push_back({"balance.switching", 0, "switching preserves balance", switching_balance});
  out.push_back({"balance.oracle", 0, "balanced iff no negative cycle", balance_oracle});
  out.push_back({"balance.harary", 0, "the Harary switching set makes every edge positive", harary});
  out.push_back({"balance.balancing-edges", 0, "balancing edges lie on every negative cycle of their component",
                 balancing_edges_oracle});
  out.push_back({"balance.balancing-vertices", 0,
                 "balancing vertices lie on every negative cycle of their component",
                 balancing_vertices_oracle});
  out.push_back({"balance.five-conditions", 2, "the five balancing-edge conditions agree",
                 balancing_edge_conditions});
  out.push_back({"sign.criterion", 1, "sign connected iff connected and unbalanced, or one vertex",
                 sign_connection_criterion});
  out.push_back({"sign.components", 1, "sign components equal the both-sign reachability classes",
                 sign_components_match});
  out.push_back({"sign.relation", 1, "joined by both signs is an equivalence relation",
                 sign_relation_equivalence});
  out.push_back({"sign.isthmi", 3, "sign isthmi are the isthmi and the balancing edges",
                 sign_isthmi_formula});
  out.push_back({"sign.articulation-exactly-one", 0,
                 "a sign articulation vertex is exactly one of: articulation vertex, on a negative cycle",
                 sign_articulation_exactly_one});
  out.push_back({"sign.articulation-one-of", 0,
                 "a sign articulation vertex is an articulation vertex or on a negative cycle",
                 sign_articulation_one_of});
  out.push_back({"sign.disjoint-negative-cycles", 0,
                 "with two disjoint negative cycles every sign articulation vertex is an articulation vertex",
                 disjoint_negative_cycles});
  out.push_back({"sign.two-unbalanced-sides", 0,
                 "an articulation vertex leaving two unbalanced pieces rules out quasibalance",
                 two_unbalanced_sides});
  out.push_back({"parity.definition", 7, "parity connection is sign connection of the all-negative graph",
                 parity_definition});
  out.push_back({"parity.bipartite", 7, "parity connected iff connected and not bipartite (n >= 2)",
                 parity_bipartite});
  out.push_back({"sign.positive-components", 8, "positive components equal positive reachability classes",
                 positive_classes});
  out.push_back({"sign.negative-components", 8,
                 "negative components equal the closed negative reachability classes", negative_classes});
}

}  // namespace signcon::verify::detail
