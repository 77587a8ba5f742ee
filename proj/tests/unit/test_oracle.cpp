#include "doctest.h"
#include "helpers.hpp"
#include "signcon/errors.hpp"
#include "signcon/matroid.hpp"
#include "signcon/oracle.hpp"

using namespace signcon;
using test::all_edges;

TEST_CASE("oracle cycles") {
  const auto tm = oracle::enumerate_elementary_cycles(fixture("T-"));
  REQUIRE(tm.size() == 1);
  CHECK(tm[0].sign == Sign::Negative);
  const auto digon = oracle::enumerate_elementary_cycles(fixture("NECK2"));
  REQUIRE(digon.size() == 1);
  CHECK(digon[0].edges == std::vector<EdgeId>{0, 1});
  CHECK(digon[0].sign == Sign::Negative);
  const auto k4 = oracle::enumerate_elementary_cycles(fixture("K4"));
  CHECK(k4.size() == 7);
  for (const auto& c : k4) CHECK(c.sign == Sign::Positive);
  CHECK(oracle::enumerate_elementary_cycles(fixture("NEGLOOP")).size() == 1);
  oracle::EnumerationBudget tiny;
  tiny.max_cycles = 3;
  CHECK_THROWS_AS(oracle::enumerate_elementary_cycles(fixture("K4"), tiny), BudgetExceeded);
}

TEST_CASE("oracle chains") {
  oracle::EnumerationBudget b;
  b.max_chain_length = 3;
  const auto n2 = oracle::enumerate_chains(fixture("N2"), 0, 1, b);
  CHECK(n2.positive.empty());
  CHECK_FALSE(n2.negative.empty());
  const auto tm = oracle::enumerate_chains(fixture("T-"), 0, 0, b);
  CHECK_FALSE(tm.positive.empty());
  CHECK_FALSE(tm.negative.empty());
  b.max_chain_length = 6;
  const auto tp = oracle::enumerate_chains(fixture("T+"), 0, 1, b);
  CHECK_FALSE(tp.positive.empty());
  CHECK(tp.negative.empty());
  for (const auto& w : tp.positive) CHECK(walk_sign(fixture("T+"), w) == Sign::Positive);
  b.max_walks = 10;
  CHECK_THROWS_AS(oracle::enumerate_chains(fixture("K4"), 0, 1, b), BudgetExceeded);
}

TEST_CASE("oracle reachability agrees with the double cover") {
  for (const auto& name : fixture_names()) {
    const auto g = fixture(name);
    for (VertexId x = 0; x < g.vertex_count(); ++x)
      CHECK(oracle::reachable_signs(g, x) == sign_reachability(g, x));
  }
}

TEST_CASE("oracle circuits") {
  CHECK(oracle::enumerate_frame_circuits(fixture("T-")).empty());
  CHECK(oracle::enumerate_lift_circuits(fixture("T-")).empty());
  const std::vector<oracle::Circuit> tight{all_edges(fixture("TIGHT"))};
  CHECK(oracle::enumerate_frame_circuits(fixture("TIGHT")) == tight);
  CHECK(oracle::enumerate_lift_circuits(fixture("TIGHT")) == tight);
  const std::vector<oracle::Circuit> loose_frame{all_edges(fixture("LOOSE"))};
  const std::vector<oracle::Circuit> loose_lift{{0, 1, 2, 3, 4, 5}};
  CHECK(oracle::enumerate_frame_circuits(fixture("LOOSE")) == loose_frame);
  CHECK(oracle::enumerate_lift_circuits(fixture("LOOSE")) == loose_lift);
}

TEST_CASE("oracle circuits classify as circuits") {
  for (const auto& name : fixture_names()) {
    const auto g = fixture(name);
    for (const auto& c : oracle::enumerate_frame_circuits(g)) CHECK(classify_circuit(g, c).frame_circuit());
    for (const auto& c : oracle::enumerate_lift_circuits(g)) CHECK(classify_circuit(g, c).lift_circuit());
  }
}

TEST_CASE("rank from circuits") {
  const auto tp = fixture("T+");
  const auto cs = oracle::enumerate_frame_circuits(tp);
  CHECK(oracle::rank_from_circuits(cs, all_edges(tp)) == 2);
  const auto tm = fixture("T-");
  CHECK(oracle::rank_from_circuits(oracle::enumerate_frame_circuits(tm), all_edges(tm)) == 3);
  CHECK(oracle::rank_from_circuits({}, std::vector<EdgeId>{0, 3, 4}) == 3);
  const auto table = oracle::circuit_rank_table(cs, 3);
  CHECK(table[7] == 2);
  CHECK(table[3] == 2);
}

TEST_CASE("oracle relations") {
  const auto tp = oracle::positive_relation(fixture("N2"));
  CHECK(tp.classes == test::Classes{{0}, {1}});
  const auto neg = oracle::negative_relation(fixture("T+"));
  CHECK(neg.classes == test::Classes{{0}, {1}, {2}});
  const auto sign = oracle::sign_relation(fixture("T-"));
  CHECK(sign.classes == test::Classes{{0, 1, 2}});
  CHECK(sign.pairwise);
  CHECK(oracle::bipartite(fixture("C4")));
  CHECK_FALSE(oracle::bipartite(fixture("C5")));
  CHECK_FALSE(oracle::bipartite(fixture("NEGLOOP")));
  CHECK(oracle::connected_classes(SignedGraph(2)).size() == 2);
  CHECK(oracle::balanced(fixture("T+")));
  CHECK_FALSE(oracle::balanced(fixture("T-")));
  const auto comps = oracle::circuit_components(oracle::enumerate_lift_circuits(fixture("LOOSE")), 7);
  CHECK(comps == test::Classes{{0, 1, 2, 3, 4, 5}, {6}});
}

TEST_CASE("oracle elementarity") {
  const auto tp = fixture("T-P");
  const auto hyper = make_walk(tp, 3, std::vector<EdgeId>{3, 0, 1, 2});
  CHECK(oracle::elementarity(tp, hyper).elementary());
  const auto detour = make_walk(tp, 0, std::vector<EdgeId>{3, 3, 0});
  CHECK_FALSE(oracle::elementarity(tp, detour).minimal_edges);
  const auto tm = fixture("T-");
  const auto twice = make_walk(tm, 0, std::vector<EdgeId>{0, 1, 2, 0, 1, 2});
  CHECK_FALSE(oracle::elementarity(tm, twice).minimal_edges);
}
