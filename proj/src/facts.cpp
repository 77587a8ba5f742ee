#include "facts.hpp"

#include <algorithm>

#include "signcon/balance.hpp"
#include "signcon/matroid.hpp"
#include "signcon/sign_connectivity.hpp"

namespace signcon::verify {

GraphFacts::GraphFacts(SignedGraph graph)
    : g(std::move(graph)), n(g.vertex_count()), m(g.edge_count()) {
  budget.max_subsets = std::size_t{1} << 24;
}

const std::vector<oracle::SignedEdgeSet>& GraphFacts::cycles() {
  if (!cycles_) cycles_ = oracle::enumerate_elementary_cycles(g, budget);
  return *cycles_;
}

const std::vector<std::vector<VertexId>>& GraphFacts::cycle_vertices() {
  if (!cycle_vertices_) {
    cycle_vertices_.emplace();
    for (const auto& c : cycles()) {
      std::vector<VertexId> vs;
      for (EdgeId e : c.edges) {
        vs.push_back(g.edge(e).u);
        vs.push_back(g.edge(e).v);
      }
      std::sort(vs.begin(), vs.end());
      vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
      cycle_vertices_->push_back(std::move(vs));
    }
  }
  return *cycle_vertices_;
}

const std::vector<oracle::Circuit>& GraphFacts::frame_circuits() {
  if (!frame_circuits_) frame_circuits_ = oracle::enumerate_frame_circuits(g, budget);
  return *frame_circuits_;
}

const std::vector<oracle::Circuit>& GraphFacts::lift_circuits() {
  if (!lift_circuits_) lift_circuits_ = oracle::enumerate_lift_circuits(g, budget);
  return *lift_circuits_;
}

const std::vector<int>& GraphFacts::frame_circuit_ranks() {
  if (!frame_ranks_) frame_ranks_ = oracle::circuit_rank_table(frame_circuits(), m, budget);
  return *frame_ranks_;
}

const std::vector<int>& GraphFacts::lift_circuit_ranks() {
  if (!lift_ranks_) lift_ranks_ = oracle::circuit_rank_table(lift_circuits(), m, budget);
  return *lift_ranks_;
}

const std::vector<std::vector<SignSet>>& GraphFacts::reach() {
  if (!reach_) {
    reach_.emplace();
    for (VertexId x = 0; x < n; ++x) reach_->push_back(oracle::reachable_signs(g, x));
  }
  return *reach_;
}

const std::vector<std::vector<VertexId>>& GraphFacts::classes() {
  if (!classes_) {
    classes_ = oracle::connected_classes(g);
    component_.assign(n, 0);
    for (int c = 0; c < static_cast<int>(classes_->size()); ++c)
      for (VertexId v : (*classes_)[c]) component_[v] = c;
  }
  return *classes_;
}

bool GraphFacts::connected() { return classes().size() == 1; }

bool GraphFacts::balanced() {
  return std::none_of(cycles().begin(), cycles().end(),
                      [](const auto& c) { return c.sign == Sign::Negative; });
}

int GraphFacts::component_of(VertexId v) {
  classes();
  return component_[v];
}

bool GraphFacts::component_unbalanced(int component) {
  for (const auto& c : cycles())
    if (c.sign == Sign::Negative && component_of(g.edge(c.edges.front()).u) == component) return true;
  return false;
}

bool GraphFacts::quasibalanced() {
  const auto& cs = cycles();
  const auto& vs = cycle_vertices();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].sign == Sign::Positive) continue;
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      if (cs[j].sign == Sign::Positive) continue;
      std::vector<VertexId> common;
      std::set_intersection(vs[i].begin(), vs[i].end(), vs[j].begin(), vs[j].end(),
                            std::back_inserter(common));
      if (common.size() < 2) return false;
    }
  }
  return true;
}

bool GraphFacts::sign_connected() {
  if (!sign_connected_) sign_connected_ = is_sign_connected(g);
  return *sign_connected_;
}

const BlockDecomposition& GraphFacts::blocks() {
  if (!blocks_) blocks_ = block_decomposition(g);
  return *blocks_;
}

const std::vector<EdgeId>& GraphFacts::isthmi() {
  if (!isthmi_) isthmi_ = signcon::isthmi(g);
  return *isthmi_;
}

const std::vector<EdgeId>& GraphFacts::balancing_edges() {
  if (!balancing_) balancing_ = signcon::balancing_edges(g);
  return *balancing_;
}

const std::vector<EdgeId>& GraphFacts::frame_isthmi() {
  if (!frame_isthmi_) frame_isthmi_ = signcon::frame_isthmi(g);
  return *frame_isthmi_;
}

const std::vector<EdgeId>& GraphFacts::lift_isthmi() {
  if (!lift_isthmi_) lift_isthmi_ = signcon::lift_isthmi(g);
  return *lift_isthmi_;
}

const std::vector<EdgeId>& GraphFacts::sign_isthmi() {
  if (!sign_isthmi_) sign_isthmi_ = signcon::sign_isthmi(g);
  return *sign_isthmi_;
}

}  // namespace signcon::verify
