#include <algorithm>
#include <random>

#include "signcon/verify.hpp"

namespace signcon::verify {
namespace {

using Slot = std::pair<VertexId, VertexId>;

std::vector<Slot> slots(int n) {
  std::vector<Slot> out;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u; v < n; ++v) out.push_back({u, v});
  return out;
}

void multisets(const std::vector<Slot>& all, std::size_t from, int remaining, int max_parallel,
               std::vector<Slot>& current, std::vector<std::vector<Slot>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  if (from == all.size()) return;
  for (int copies = std::min(max_parallel, remaining); copies >= 0; --copies) {
    for (int i = 0; i < copies; ++i) current.push_back(all[from]);
    multisets(all, from + 1, remaining - copies, max_parallel, current, out);
    current.resize(current.size() - copies);
  }
}

}  // namespace

GraphSpace::GraphSpace(const GeneratorLimits& limits) {
  for (int n = limits.min_n; n <= limits.max_n; ++n) {
    const auto all = slots(n);
    for (int m = 0; m <= limits.max_m; ++m) {
      std::vector<std::vector<Slot>> found;
      std::vector<Slot> current;
      multisets(all, 0, m, limits.max_parallel, current, found);
      std::sort(found.begin(), found.end());
      for (auto& edges : found) {
        shapes_.push_back({n, std::move(edges), total_});
        total_ += std::size_t{1} << m;
      }
    }
  }
}

SignedGraph GraphSpace::at(std::size_t index) const {
  const auto it = std::upper_bound(shapes_.begin(), shapes_.end(), index,
                                   [](std::size_t i, const Shape& s) { return i < s.offset; });
  const Shape& shape = *std::prev(it);
  const std::size_t signing = index - shape.offset;
  std::vector<EdgeSpec> specs;
  for (std::size_t e = 0; e < shape.edges.size(); ++e) {
    const Sign s = (signing >> e & 1) ? Sign::Negative : Sign::Positive;
    specs.push_back({shape.edges[e].first, shape.edges[e].second, s});
  }
  return SignedGraph(shape.n, specs);
}

SignedGraph random_graph(std::uint64_t seed, int max_n, int max_m, int max_parallel) {
  std::mt19937_64 rng(seed);
  const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
  const auto all = slots(n);
  const int cap = static_cast<int>(all.size()) * max_parallel;
  const int m = std::uniform_int_distribution<int>(0, std::min(max_m, cap))(rng);
  std::vector<int> used(all.size(), 0);
  std::vector<EdgeSpec> specs;
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::bernoulli_distribution negative(0.5);
  while (static_cast<int>(specs.size()) < m) {
    const std::size_t s = pick(rng);
    if (used[s] == max_parallel) continue;
    ++used[s];
    specs.push_back({all[s].first, all[s].second, negative(rng) ? Sign::Negative : Sign::Positive});
  }
  return SignedGraph(n, specs);
}

}  // namespace signcon::verify
