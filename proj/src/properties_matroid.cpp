#include <algorithm>
#include <set>

#include "property_util.hpp"
#include "signcon/matroid.hpp"
#include "signcon/sign_connectivity.hpp"

namespace signcon::verify::detail {
namespace {

unsigned mask_of(const std::vector<EdgeId>& edges) {
  unsigned m = 0;
  for (EdgeId e : edges) m |= 1u << e;
  return m;
}

Outcome circuits_classified(GraphFacts& f) {
  std::set<unsigned> frame, lift;
  for (const auto& c : f.frame_circuits()) frame.insert(mask_of(c));
  for (const auto& c : f.lift_circuits()) lift.insert(mask_of(c));
  for (unsigned s = 0; s < (1u << f.m); ++s) {
    const auto verdict = classify_circuit(f.g, edges_of(s));
    if (verdict.frame_circuit() != frame.count(s) || verdict.lift_circuit() != lift.count(s)) {
      return Outcome::violated(show(edges_of(s)) + " classified " + std::string(to_string(verdict.type)));
    }
  }
  return Outcome::holds();
}

std::string circuit_axiom_failure(const std::vector<oracle::Circuit>& family) {
  std::vector<unsigned> cs;
  for (const auto& c : family) cs.push_back(mask_of(c));
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (i == j) continue;
      if ((cs[i] & cs[j]) == cs[i]) return "nested circuits";
      const unsigned common = cs[i] & cs[j];
      for (EdgeId e : edges_of(common)) {
        const unsigned rest = (cs[i] | cs[j]) & ~(1u << e);
        if (std::none_of(cs.begin(), cs.end(), [&](unsigned c) { return (c & rest) == c; }))
          return "elimination fails on edge " + std::to_string(e);
      }
    }
  }
  return {};
}

Outcome circuit_axioms(GraphFacts& f) {
  if (auto why = circuit_axiom_failure(f.frame_circuits()); !why.empty()) return Outcome::violated("frame: " + why);
  if (auto why = circuit_axiom_failure(f.lift_circuits()); !why.empty()) return Outcome::violated("lift: " + why);
  return Outcome::holds();
}

template <typename Rank>
std::string rank_axiom_failure(int m, Rank rank) {
  const unsigned full = 1u << m;
  std::vector<int> r(full);
  for (unsigned s = 0; s < full; ++s) r[s] = rank(s);
  if (r[0] != 0) return "r(empty) != 0";
  for (unsigned s = 0; s < full; ++s) {
    for (int e = 0; e < m; ++e) {
      if (s >> e & 1) continue;
      const int step = r[s | 1u << e] - r[s];
      if (step != 0 && step != 1) return "step of " + std::to_string(step) + " adding " + std::to_string(e);
    }
    for (unsigned t = 0; t < full; ++t)
      if (r[s] + r[t] < r[s | t] + r[s & t]) return "submodularity fails on " + show(edges_of(s)) + "," + show(edges_of(t));
  }
  return {};
}

Outcome rank_axioms(GraphFacts& f) {
  auto frame = [&](unsigned s) { return frame_rank(f.g, edges_of(s)); };
  auto lift = [&](unsigned s) { return lift_rank(f.g, edges_of(s)); };
  if (auto why = rank_axiom_failure(f.m, frame); !why.empty()) return Outcome::violated("frame: " + why);
  if (auto why = rank_axiom_failure(f.m, lift); !why.empty()) return Outcome::violated("lift: " + why);
  return Outcome::holds();
}

Outcome rank_matches_circuits(GraphFacts& f) {
  for (unsigned s = 0; s < (1u << f.m); ++s) {
    const auto F = edges_of(s);
    if (frame_rank(f.g, F) != f.frame_circuit_ranks()[s]) {
      return Outcome::violated("frame rank of " + show(F) + " is " + std::to_string(frame_rank(f.g, F)) +
                               ", circuits give " + std::to_string(f.frame_circuit_ranks()[s]));
    }
    if (lift_rank(f.g, F) != f.lift_circuit_ranks()[s]) {
      return Outcome::violated("lift rank of " + show(F) + " is " + std::to_string(lift_rank(f.g, F)) +
                               ", circuits give " + std::to_string(f.lift_circuit_ranks()[s]));
    }
  }
  return Outcome::holds();
}

std::vector<EdgeId> circuit_free(int m, const std::vector<oracle::Circuit>& family) {
  std::vector<bool> seen(m, false);
  for (const auto& c : family)
    for (EdgeId e : c) seen[e] = true;
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < m; ++e)
    if (!seen[e]) out.push_back(e);
  return out;
}

Outcome isthmi_match_circuits(GraphFacts& f) {
  const auto frame = circuit_free(f.m, f.frame_circuits());
  if (f.frame_isthmi() != frame) return Outcome::violated("frame " + show(f.frame_isthmi()) + " vs " + show(frame));
  const auto lift = circuit_free(f.m, f.lift_circuits());
  if (f.lift_isthmi() != lift) return Outcome::violated("lift " + show(f.lift_isthmi()) + " vs " + show(lift));
  return Outcome::holds();
}

Outcome rank_drop(GraphFacts& f) {
  const auto all = all_edges(f.g);
  const int rf = frame_rank(f.g, all);
  const int rl = lift_rank(f.g, all);
  for (EdgeId e = 0; e < f.m; ++e) {
    std::vector<EdgeId> rest;
    for (EdgeId h : all)
      if (h != e) rest.push_back(h);
    if ((rf - frame_rank(f.g, rest) == 1) != has(f.frame_isthmi(), e)) return Outcome::violated("frame, edge " + std::to_string(e));
    if ((rl - lift_rank(f.g, rest) == 1) != has(f.lift_isthmi(), e)) return Outcome::violated("lift, edge " + std::to_string(e));
  }
  return Outcome::holds();
}

Outcome frame_isthmi_in_lift(GraphFacts& f) {
  if (!subset(f.frame_isthmi(), f.lift_isthmi())) return Outcome::violated("frame isthmi " + show(f.frame_isthmi()));
  return Outcome::holds();
}

std::vector<VertexId> degree_zero(const SignedGraph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    bool touched = false;
    for (const Edge& e : g.edges()) touched = touched || e.u == v || e.v == v;
    if (!touched) out.push_back(v);
  }
  return out;
}

Outcome components_match_circuits(GraphFacts& f) {
  const auto isolated = degree_zero(f.g);
  const auto frame = frame_components(f.g);
  const auto frame_oracle = oracle::circuit_components(f.frame_circuits(), f.m);
  if (frame.classes != frame_oracle || frame.isolated != isolated)
    return Outcome::violated("frame " + show(frame.classes) + " vs " + show(frame_oracle));
  const auto lift = lift_components(f.g);
  const auto lift_oracle = oracle::circuit_components(f.lift_circuits(), f.m);
  if (lift.classes != lift_oracle || lift.isolated != isolated)
    return Outcome::violated("lift " + show(lift.classes) + " vs " + show(lift_oracle));
  return Outcome::holds();
}

Outcome connection_definition(GraphFacts& f) {
  const bool k1 = f.n == 1 && f.m == 0;
  const bool frame = k1 || (degree_zero(f.g).empty() && f.m > 0 &&
                            oracle::circuit_components(f.frame_circuits(), f.m).size() == 1);
  const bool lift = k1 || (degree_zero(f.g).empty() && f.m > 0 &&
                           oracle::circuit_components(f.lift_circuits(), f.m).size() == 1);
  if (is_frame_connected(f.g) != frame) return Outcome::violated("is_frame_connected");
  if (is_lift_connected(f.g) != lift) return Outcome::violated("is_lift_connected");
  return Outcome::holds();
}

Outcome frame_connection_implies_sign(GraphFacts& f) {
  if (!is_frame_connected(f.g)) return Outcome::na();
  return f.sign_connected() ? Outcome::holds() : Outcome::violated("frame connected but not sign connected");
}

Outcome lift_connection_implies_sign(GraphFacts& f) {
  if (!is_lift_connected(f.g)) return Outcome::na();
  for (int c = 0; c < static_cast<int>(f.classes().size()); ++c) {
    if (f.classes()[c].size() > 1 && !f.component_unbalanced(c))
      return Outcome::violated("component " + show(f.classes()[c]) + " is not sign connected");
  }
  return Outcome::holds();
}

Outcome matroid_isthmi_are_sign_isthmi(GraphFacts& f) {
  if (!f.sign_connected() || f.n <= 1) return Outcome::na();
  if (!subset(f.frame_isthmi(), f.sign_isthmi())) return Outcome::violated("frame isthmi " + show(f.frame_isthmi()));
  if (!subset(f.lift_isthmi(), f.sign_isthmi())) return Outcome::violated("lift isthmi " + show(f.lift_isthmi()));
  return Outcome::holds();
}

Outcome sign_isthmi_are_lift_isthmi(GraphFacts& f) {
  if (!f.sign_connected() || f.n <= 1) return Outcome::na();
  if (!subset(f.sign_isthmi(), f.lift_isthmi())) return Outcome::violated("sign isthmi " + show(f.sign_isthmi()));
  return Outcome::holds();
}

/// Vertex sets of the two sides left by deleting the isthmus e.
std::pair<std::vector<VertexId>, std::vector<VertexId>> sides(GraphFacts& f, EdgeId e) {
  const auto classes = oracle::connected_classes(without_edge(f.g, e));
  const Edge& edge = f.g.edge(e);
  std::vector<VertexId> a, b;
  for (const auto& c : classes) {
    if (has(c, edge.u)) a = c;
    if (has(c, edge.v)) b = c;
  }
  return {a, b};
}

template <typename Compare>
Outcome for_isthmus_sign_isthmi(GraphFacts& f, Compare compare) {
  if (!f.sign_connected() || f.n <= 1) return Outcome::na();
  bool any = false;
  for (EdgeId e : f.sign_isthmi()) {
    if (!has(f.isthmi(), e)) continue;
    any = true;
    const auto [a, b] = sides(f, e);
    const bool both_sign = side_sign_connected(f, a, e) && side_sign_connected(f, b, e);
    if (auto why = compare(e, both_sign, a, b); !why.empty()) return Outcome::violated(why);
  }
  return any ? Outcome::holds() : Outcome::na();
}

Outcome isthmus_sides_frame(GraphFacts& f) {
  return for_isthmus_sign_isthmi(f, [&](EdgeId e, bool both_sign, const auto&, const auto&) -> std::string {
    const bool frame = has(f.frame_isthmi(), e);
    if (both_sign == !frame) return {};
    return "edge " + std::to_string(e) + ": sides sign connected=" + (both_sign ? "T" : "F") +
           ", frame isthmus=" + (frame ? "T" : "F");
  });
}

Outcome isthmus_sides_unbalanced(GraphFacts& f) {
  return for_isthmus_sign_isthmi(f, [&](EdgeId e, bool both_sign, const auto& a, const auto& b) -> std::string {
    const bool unbalanced = side_unbalanced(f, a, e) && side_unbalanced(f, b, e);
    if (both_sign == unbalanced) return {};
    return "edge " + std::to_string(e) + ": sides sign connected=" + (both_sign ? "T" : "F") +
           ", both unbalanced=" + (unbalanced ? "T" : "F");
  });
}

Outcome quasibalance_matches(GraphFacts& f) {
  if (is_quasibalanced(f.g) != f.quasibalanced()) return Outcome::violated("is_quasibalanced disagrees");
  return Outcome::holds();
}

Outcome quasibalance_blocks(GraphFacts& f) {
  int unbalanced = 0;
  for (const auto& b : f.blocks().blocks) unbalanced += b.balanced ? 0 : 1;
  if (f.quasibalanced() && unbalanced >= 2) return Outcome::violated("quasibalanced with two unbalanced blocks");
  return Outcome::holds();
}

bool is_positive_cycle(GraphFacts& f, const oracle::Circuit& c) {
  return std::any_of(f.cycles().begin(), f.cycles().end(),
                     [&](const auto& cy) { return cy.sign == Sign::Positive && cy.edges == c; });
}

Outcome quasibalance_circuits(GraphFacts& f) {
  const bool handcuff = std::any_of(f.lift_circuits().begin(), f.lift_circuits().end(),
                                    [&](const auto& c) { return !is_positive_cycle(f, c); });
  if (f.quasibalanced() == handcuff) return Outcome::violated("lift handcuffs vs quasibalance");
  // Frame version: every component quasibalanced iff no frame handcuff.
  bool components_quasi = true;
  const auto& cs = f.cycles();
  const auto& vs = f.cycle_vertices();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      if (cs[i].sign == Sign::Positive || cs[j].sign == Sign::Positive) continue;
      if (f.component_of(vs[i].front()) != f.component_of(vs[j].front())) continue;
      std::vector<VertexId> common;
      std::set_intersection(vs[i].begin(), vs[i].end(), vs[j].begin(), vs[j].end(),
                            std::back_inserter(common));
      if (common.size() < 2) components_quasi = false;
    }
  }
  const bool frame_handcuff = std::any_of(f.frame_circuits().begin(), f.frame_circuits().end(),
                                          [&](const auto& c) { return !is_positive_cycle(f, c); });
  if (components_quasi == frame_handcuff) return Outcome::violated("frame handcuffs vs quasibalanced components");
  return Outcome::holds();
}

Outcome negative_loops_are_isthmi(GraphFacts& f) {
  if (!f.connected() || !f.quasibalanced()) return Outcome::na();
  bool any = false;
  for (const Edge& e : f.g.edges()) {
    if (!e.is_loop() || e.sign == Sign::Positive) continue;
    any = true;
    if (!has(f.frame_isthmi(), e.id) || !has(f.lift_isthmi(), e.id))
      return Outcome::violated("negative loop " + std::to_string(e.id));
  }
  return any ? Outcome::holds() : Outcome::na();
}

}  // namespace

void add_matroid_properties(std::vector<Property>& out) {
  out.push_back({"matroid.circuits", 4, "classify_circuit accepts exactly the enumerated circuits",
                 circuits_classified});
  out.push_back({"matroid.circuit-axioms", 4, "enumerated circuits are incomparable and satisfy elimination",
                 circuit_axioms});
  out.push_back({"matroid.rank-axioms", 4, "frame and lift ranks are normalized, unit-increasing, submodular",
                 rank_axioms});
  out.push_back({"matroid.rank-circuits", 4, "rank formulas equal the circuit-defined rank on every subset",
                 rank_matches_circuits});
  out.push_back({"matroid.isthmi-circuits", 4, "matroid isthmi are the edges in no circuit",
                 isthmi_match_circuits});
  out.push_back({"matroid.rank-drop", 4, "deleting an edge drops the rank iff it is a matroid isthmus", rank_drop});
  out.push_back({"matroid.frame-in-lift", 0, "frame isthmi are lift isthmi", frame_isthmi_in_lift});
  out.push_back({"matroid.components-circuits", 4, "structural components equal the common-circuit closure",
                 components_match_circuits});
  out.push_back({"matroid.connection", 4, "matroid connection means one component", connection_definition});
  out.push_back({"matroid.frame-connected-sign", 5, "frame connected implies sign connected",
                 frame_connection_implies_sign});
  out.push_back({"matroid.lift-connected-sign", 5, "lift connected implies every component sign connected",
                 lift_connection_implies_sign});
  out.push_back({"matroid.isthmi-sign", 5, "frame and lift isthmi of a sign-connected graph are sign isthmi",
                 matroid_isthmi_are_sign_isthmi});
  out.push_back({"matroid.sign-isthmi-lift", 5, "sign isthmi are lift isthmi", sign_isthmi_are_lift_isthmi});
  out.push_back({"matroid.isthmus-sides-frame", 5,
                 "an isthmus sign isthmus leaves two sign-connected sides iff it is not a frame isthmus",
                 isthmus_sides_frame});
  out.push_back({"matroid.isthmus-sides-unbalanced", 5,
                 "an isthmus sign isthmus leaves two sign-connected sides iff both are unbalanced",
                 isthmus_sides_unbalanced});
  out.push_back({"matroid.quasibalance", 9, "quasibalance equals pairwise negative-cycle intersection",
                 quasibalance_matches});
  out.push_back({"matroid.quasibalance-blocks", 9, "quasibalanced graphs have at most one unbalanced block",
                 quasibalance_blocks});
  out.push_back({"matroid.quasibalance-circuits", 9, "quasibalance iff no handcuff circuit",
                 quasibalance_circuits});
  out.push_back({"matroid.negative-loops", 9, "negative loops of connected quasibalanced graphs are isthmi",
                 negative_loops_are_isthmi});
}

}  // namespace signcon::verify::detail
