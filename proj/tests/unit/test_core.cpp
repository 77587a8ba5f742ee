#include "doctest.h"
#include "helpers.hpp"
#include "signcon/core.hpp"
#include "signcon/errors.hpp"

using namespace signcon;

TEST_CASE("walk sign multiplies edge signs") {
  const auto g = fixture("T-");
  const std::vector<EdgeId> path{0, 1};
  CHECK(walk_sign(g, make_walk(g, 0, path)) == Sign::Positive);
  const std::vector<EdgeId> back{2};
  CHECK(walk_sign(g, make_walk(g, 0, back)) == Sign::Negative);
  const std::vector<EdgeId> around{0, 1, 2};
  const auto w = make_walk(g, 0, around);
  CHECK(walk_sign(g, w) == Sign::Negative);
  CHECK(walk_end(g, w) == 0);
  CHECK(walk_vertices(g, w) == std::vector<VertexId>{0, 1, 2, 0});
}

TEST_CASE("walks must follow incidences") {
  const auto g = fixture("T-");
  const std::vector<EdgeId> broken{1, 0};
  CHECK_THROWS_AS(make_walk(g, 1, broken), InvalidWalk);
  Walk bad{0, {{1, true}}};
  CHECK_THROWS_AS(walk_sign(g, bad), InvalidWalk);
  Walk unknown{0, {{7, true}}};
  CHECK_THROWS_AS(walk_sign(g, unknown), Error);
}

TEST_CASE("switching") {
  const auto g = fixture("T-");
  const std::vector<VertexId> w{2};
  const auto s = switched(g, w);
  CHECK(s.edge(0).sign == Sign::Positive);
  CHECK(s.edge(1).sign == Sign::Negative);
  CHECK(s.edge(2).sign == Sign::Positive);
  CHECK(switched(g, std::vector<VertexId>{}) == g);
  const auto loop = fixture("NEGLOOP");
  CHECK(switched(loop, std::vector<VertexId>{0}).edge(0).sign == Sign::Negative);
}

TEST_CASE("double cover") {
  const auto n2 = double_cover(fixture("N2"));
  CHECK(n2.vertices.size() == 4);
  CHECK(n2.edges.size() == 2);
  CHECK(n2.components().size() == 2);
  const auto tp = double_cover(fixture("T+"));
  CHECK(tp.components().size() == 2);
  const auto tm = double_cover(fixture("T-"));
  REQUIRE(tm.components().size() == 1);
  CHECK(tm.components()[0].size() == 6);
}

TEST_CASE("sign reachability") {
  for (const auto& s : sign_reachability(fixture("T-"), 0)) CHECK(s.both());
  for (const auto& s : sign_reachability(fixture("T+"), 0)) {
    CHECK(s.positive);
    CHECK_FALSE(s.negative);
  }
  const auto n2 = sign_reachability(fixture("N2"), 0);
  CHECK(n2[0] == SignSet{true, false});
  CHECK(n2[1] == SignSet{false, true});
  CHECK_THROWS_AS(sign_reachability(fixture("N2"), 5), VertexOutOfRange);
}

TEST_CASE("balance analysis of a restriction") {
  const auto g = fixture("LOOSE");
  Subgraph h(g);
  h.remove_edge(6);
  const auto info = analyze_balance(h);
  CHECK(info.components.count == 2);
  CHECK(info.balanced_count() == 0);
  h.remove_edge(2);
  CHECK(analyze_balance(h).balanced_count() == 1);
}

TEST_CASE("deletions renumber") {
  const auto g = fixture("LOOSE");
  const auto x = without_vertex(g, 0);
  CHECK(x.vertex_count() == 5);
  CHECK(x.edge_count() == 4);
  const auto y = without_edge(g, 6);
  CHECK(y.edge_count() == 6);
  const std::vector<VertexId> keep{3, 4, 5};
  const auto z = induced_subgraph(g, keep);
  CHECK(z.graph.edge_count() == 3);
  CHECK(z.vertex_map == keep);
  CHECK(z.edge_map == std::vector<EdgeId>{3, 4, 5});
}
