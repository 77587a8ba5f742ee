#pragma once

#include <cstddef>
#include <vector>

#include "signcon/core.hpp"

namespace signcon {

/// An elementary cycle; loops are cycles of length 1 and a pair of parallel
/// edges is a digon.
struct Cycle {
  std::vector<EdgeId> edges;       // sorted
  std::vector<VertexId> vertices;  // sorted
  Sign sign = Sign::Positive;
};

inline constexpr std::size_t kDefaultCycleCap = 100000;

/// All elementary cycles of a restriction, by backtracking from each
/// cycle's smallest vertex. Throws CycleBudgetExceeded past `max_cycles`.
std::vector<Cycle> elementary_cycles(const Subgraph& h, std::size_t max_cycles = kDefaultCycleCap);

}  // namespace signcon
