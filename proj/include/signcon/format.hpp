#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "signcon/core.hpp"
#include "signcon/matroid.hpp"
#include "signcon/partition.hpp"

namespace signcon {

/// Space separated ids; empty string for none.
std::string join_ids(std::span<const int> ids);

/// One class per line. Edge kinds end with an "isolated:" line when some
/// vertex has no incident edge.
std::string format_partition(const ComponentPartition& p);

/// "<type> <frame|lift|both|neither>".
std::string format_circuit(const CircuitClassification& c);

/// "all", "none", or comma separated edge ids. Throws EdgeOutOfRange or
/// std::invalid_argument.
std::vector<EdgeId> parse_edge_selection(std::string_view text, const SignedGraph& g);

}  // namespace signcon
