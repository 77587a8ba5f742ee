#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "facts.hpp"
#include "signcon/verify.hpp"

namespace signcon::verify::detail {

inline std::string show(const std::vector<int>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "}";
}

inline std::string show(const std::vector<std::vector<int>>& xss) {
  std::string out = "[";
  for (std::size_t i = 0; i < xss.size(); ++i) out += (i ? " " : "") + show(xss[i]);
  return out + "]";
}

inline std::vector<int> united(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

inline bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool has(const std::vector<int>& sorted, int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

inline std::vector<EdgeId> edges_of(unsigned mask) {
  std::vector<EdgeId> out;
  for (int e = 0; mask >> e; ++e)
    if (mask >> e & 1) out.push_back(e);
  return out;
}

inline std::vector<EdgeId> all_edges(const SignedGraph& g) {
  std::vector<EdgeId> out(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) out[e] = e;
  return out;
}

/// Graph induced on one side of a deletion, as a check for sign connection
/// that avoids the library: a single vertex, or connected with a negative cycle.
bool side_sign_connected(GraphFacts& f, const std::vector<VertexId>& side, EdgeId removed);
bool side_unbalanced(GraphFacts& f, const std::vector<VertexId>& side, EdgeId removed);

void add_basic_properties(std::vector<Property>& out);
void add_structure_properties(std::vector<Property>& out);
void add_matroid_properties(std::vector<Property>& out);

}  // namespace signcon::verify::detail
