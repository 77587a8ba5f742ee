#include <algorithm>

#include "doctest.h"
#include "signcon/graph_io.hpp"
#include "signcon/report.hpp"

using namespace signcon;

namespace {

const TaggedIds* find(const std::vector<TaggedIds>& list, const std::string& kind) {
  auto it = std::find_if(list.begin(), list.end(), [&](const TaggedIds& t) { return t.kind == kind; });
  return it == list.end() ? nullptr : &*it;
}

}  // namespace

TEST_CASE("report of the loose handcuff") {
  const auto r = analyze(fixture("LOOSE"));
  CHECK_FALSE(r.balanced);
  CHECK_FALSE(r.harary_bipartition.has_value());
  REQUIRE(r.components.size() == 6);
  CHECK(r.components[1].kind == PartitionKind::Sign);
  CHECK(r.components[1].classes == std::vector<std::vector<int>>{{0, 1, 2, 3, 4, 5}});
  CHECK(find(r.isthmi, "frame_coloop")->ids.empty());
  CHECK(find(r.isthmi, "lift_coloop")->ids == std::vector<int>{6});
  CHECK(find(r.isthmi, "sign_isthmus")->ids == std::vector<int>{6});
  CHECK(find(r.articulation, "sign_articulation")->ids == std::vector<int>{0, 3});
  CHECK(r.quasibalanced == false);
  CHECK(r.sign_connected);
  CHECK(r.frame_connected);
  CHECK_FALSE(r.lift_connected);
}

TEST_CASE("sign isthmi are reported per sign component") {
  // Two negative triangles in separate components.
  const auto g = parse_graph("signed-graph n=6\n0 1 +\n1 2 +\n2 0 -\n3 4 -\n4 5 +\n5 3 +\n");
  const auto r = analyze(g);
  std::vector<TaggedIds> sign;
  for (const auto& t : r.isthmi)
    if (t.kind == "sign_isthmus") sign.push_back(t);
  REQUIRE(sign.size() == 2);
  CHECK(sign[0].component == std::vector<VertexId>{0, 1, 2});
  CHECK(sign[0].ids == std::vector<int>{0, 1, 2});
  CHECK(sign[1].component == std::vector<VertexId>{3, 4, 5});
  CHECK(sign[1].ids == std::vector<int>{3, 4, 5});
}

TEST_CASE("json keys are stable and the report round trips") {
  for (const auto& name : fixture_names()) {
    const auto r = analyze(fixture(name));
    const auto j = to_json(r);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"vertices", "edges", "balanced", "harary_bipartition", "components",
                                           "isthmi", "articulation", "balancing_vertices", "quasibalanced",
                                           "contrabalanced", "cactus", "connection"});
    CHECK(report_from_json(j) == r);
    CHECK(report_from_json(nlohmann::ordered_json::parse(j.dump())) == r);
    CHECK(to_json(report_from_json(j)).dump() == j.dump());
  }
}

TEST_CASE("json uses the kind tags") {
  const auto j = to_json(analyze(fixture("T-")));
  std::vector<std::string> kinds;
  for (const auto& t : j["isthmi"]) kinds.push_back(t["kind"]);
  for (const char* k : {"sign_isthmus", "balancing_edge", "frame_coloop", "lift_coloop"})
    CHECK(std::count(kinds.begin(), kinds.end(), k) == 1);
}
