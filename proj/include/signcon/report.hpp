#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "signcon/balance.hpp"
#include "signcon/core.hpp"
#include "signcon/partition.hpp"

namespace signcon {

/// Edge or vertex ids of one kind, optionally scoped to a sign component.
struct TaggedIds {
  std::string kind;  // "isthmus", "sign_isthmus", "balancing_edge", "frame_coloop", ...
  std::vector<VertexId> component;  // sign component the ids belong to; empty when global
  std::vector<int> ids;
  bool operator==(const TaggedIds&) const = default;
};

struct Report {
  int vertices = 0;
  int edges = 0;
  bool balanced = true;
  std::optional<HararyBipartition> harary_bipartition;
  std::vector<ComponentPartition> components;  // graph, sign, positive, negative, frame, lift
  std::vector<TaggedIds> isthmi;
  std::vector<TaggedIds> articulation;
  std::vector<VertexId> balancing_vertices;
  std::optional<bool> quasibalanced;  // empty when the cycle budget ran out
  bool contrabalanced = false;
  bool cactus = false;
  bool sign_connected = false;
  bool parity_connected = false;
  bool frame_connected = false;
  bool lift_connected = false;

  bool operator==(const Report&) const = default;
};

Report analyze(const SignedGraph& g);

nlohmann::ordered_json to_json(const Report& r);
/// Inverse of to_json. Throws nlohmann::json::exception on malformed input.
Report report_from_json(const nlohmann::ordered_json& j);

}  // namespace signcon
