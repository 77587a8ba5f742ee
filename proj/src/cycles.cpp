#include "signcon/cycles.hpp"

#include <algorithm>

namespace signcon {
namespace {

class CycleSearch {
 public:
  CycleSearch(const Subgraph& h, std::size_t cap)
      : h_(h), g_(h.graph()), cap_(cap), on_path_(g_.vertex_count(), false) {}

  std::vector<Cycle> run() {
    for (const Edge& e : g_.edges())
      if (e.is_loop() && h_.has_edge(e.id)) emit({e.id}, {e.u});
    for (VertexId s = 0; s < g_.vertex_count(); ++s) {
      if (!h_.has_vertex(s)) continue;
      root_ = s;
      on_path_[s] = true;
      path_vertices_ = {s};
      extend(s);
      on_path_[s] = false;
    }
    return std::move(found_);
  }

 private:
  void extend(VertexId at) {
    for (EdgeId id : g_.incident_edges(at)) {
      const Edge& e = g_.edge(id);
      if (e.is_loop() || !h_.has_edge(id)) continue;
      if (!path_edges_.empty() && id == path_edges_.back()) continue;
      const VertexId next = e.other(at);
      if (next == root_) {
        // Each cycle is met in both directions; keep the one whose first
        // edge has the smaller id.
        if (!path_edges_.empty() && path_edges_.front() < id) {
          auto edges = path_edges_;
          edges.push_back(id);
          emit(std::move(edges), path_vertices_);
        }
        continue;
      }
      if (next < root_ || on_path_[next]) continue;
      on_path_[next] = true;
      path_edges_.push_back(id);
      path_vertices_.push_back(next);
      extend(next);
      path_vertices_.pop_back();
      path_edges_.pop_back();
      on_path_[next] = false;
    }
  }

  void emit(std::vector<EdgeId> edges, std::vector<VertexId> vertices) {
    if (found_.size() >= cap_) {
      throw CycleBudgetExceeded("elementary cycle enumeration exceeded " + std::to_string(cap_) +
                                " cycles");
    }
    Cycle c;
    c.sign = Sign::Positive;
    for (EdgeId id : edges) c.sign = c.sign * g_.edge(id).sign;
    std::sort(edges.begin(), edges.end());
    std::sort(vertices.begin(), vertices.end());
    c.edges = std::move(edges);
    c.vertices = std::move(vertices);
    found_.push_back(std::move(c));
  }

  const Subgraph& h_;
  const SignedGraph& g_;
  std::size_t cap_;
  VertexId root_ = 0;
  std::vector<bool> on_path_;
  std::vector<EdgeId> path_edges_;
  std::vector<VertexId> path_vertices_;
  std::vector<Cycle> found_;
};

}  // namespace

std::vector<Cycle> elementary_cycles(const Subgraph& h, std::size_t max_cycles) {
  auto cycles = CycleSearch(h, max_cycles).run();
  std::sort(cycles.begin(), cycles.end(),
            [](const Cycle& a, const Cycle& b) { return a.edges < b.edges; });
  return cycles;
}

}  // namespace signcon
