#include "doctest.h"
#include "helpers.hpp"
#include "signcon/matroid.hpp"

using namespace signcon;
using test::all_edges;
using test::Classes;

TEST_CASE("circuit classification") {
  CHECK(classify_circuit(fixture("T+"), all_edges(fixture("T+"))).type == CircuitType::PositiveCycle);
  CHECK(classify_circuit(fixture("TIGHT"), all_edges(fixture("TIGHT"))).type ==
        CircuitType::TightHandcuff);
  const auto loose = fixture("LOOSE");
  const auto pair = classify_circuit(loose, std::vector<EdgeId>{0, 1, 2, 3, 4, 5});
  CHECK(pair.type == CircuitType::DisjointPair);
  CHECK(pair.lift_circuit());
  CHECK_FALSE(pair.frame_circuit());
  const auto cuff = classify_circuit(loose, all_edges(loose));
  CHECK(cuff.type == CircuitType::LooseHandcuff);
  CHECK(cuff.connector == std::vector<EdgeId>{6});
  CHECK(cuff.frame_circuit());
  CHECK_FALSE(cuff.lift_circuit());
  CHECK(classify_circuit(fixture("T-"), all_edges(fixture("T-"))).type == CircuitType::NotACircuit);
  CHECK(classify_circuit(fixture("THETA"), all_edges(fixture("THETA"))).type ==
        CircuitType::NotACircuit);
}

TEST_CASE("circuits made of loops") {
  const SignedGraph same(1, {{0, 0, Sign::Negative}, {0, 0, Sign::Negative}});
  CHECK(classify_circuit(same, all_edges(same)).type == CircuitType::TightHandcuff);
  const SignedGraph apart(2, {{0, 0, Sign::Negative}, {1, 1, Sign::Negative}, {0, 1, Sign::Positive}});
  CHECK(classify_circuit(apart, all_edges(apart)).type == CircuitType::LooseHandcuff);
  CHECK(classify_circuit(apart, std::vector<EdgeId>{0, 1}).type == CircuitType::DisjointPair);
}

TEST_CASE("ranks") {
  const auto tm = fixture("T-");
  CHECK(frame_rank(tm, std::vector<EdgeId>{}) == 0);
  CHECK(frame_rank(tm, all_edges(tm)) == 3);
  CHECK(frame_rank(fixture("T+"), all_edges(fixture("T+"))) == 2);
  CHECK(lift_rank(tm, all_edges(tm)) == 3);
  CHECK(lift_rank(tm, std::vector<EdgeId>{}) == 0);
  CHECK(lift_rank(fixture("T+"), all_edges(fixture("T+"))) == 2);
  CHECK(lift_rank(fixture("LOOSE"), std::vector<EdgeId>{0, 1, 2, 3, 4, 5}) == 5);
  CHECK(lift_rank(fixture("LOOSE"), all_edges(fixture("LOOSE"))) == 6);
  const auto q = rank_query(fixture("LOOSE"), std::vector<EdgeId>{0, 1, 2, 3, 4, 5});
  CHECK(q.c == 2);
  CHECK(q.b == 0);
  CHECK(q.delta == 1);
}

TEST_CASE("matroid components") {
  CHECK(frame_components(fixture("LOOSE")).classes == Classes{{0, 1, 2, 3, 4, 5, 6}});
  CHECK(frame_components(fixture("NECK2")).classes == Classes{{0}, {1}});
  CHECK(frame_components(fixture("T+")).classes == Classes{{0, 1, 2}});
  CHECK(lift_components(fixture("LOOSE")).classes == Classes{{0, 1, 2, 3, 4, 5}, {6}});
  CHECK(lift_components(fixture("NECK2")).classes == Classes{{0}, {1}});
  CHECK(lift_components(fixture("T+")).classes == Classes{{0, 1, 2}});
  CHECK(frame_components(SignedGraph(2)).isolated == std::vector<VertexId>{0, 1});
}

TEST_CASE("matroid isthmi") {
  CHECK(frame_isthmi(fixture("T-")) == std::vector<EdgeId>{0, 1, 2});
  CHECK(lift_isthmi(fixture("T-")) == std::vector<EdgeId>{0, 1, 2});
  CHECK(frame_isthmi(fixture("LOOSE")).empty());
  CHECK(lift_isthmi(fixture("LOOSE")) == std::vector<EdgeId>{6});
  CHECK(frame_isthmi(fixture("NEGLOOP+P")) == std::vector<EdgeId>{0, 1});
  CHECK(lift_isthmi(fixture("NEGLOOP+P")) == std::vector<EdgeId>{0, 1});
}

TEST_CASE("matroid connection") {
  CHECK(is_frame_connected(fixture("TIGHT")));
  CHECK(is_lift_connected(fixture("TIGHT")));
  CHECK(is_frame_connected(fixture("LOOSE")));
  CHECK_FALSE(is_lift_connected(fixture("LOOSE")));
  CHECK(is_frame_connected(fixture("T+")));
  CHECK(is_lift_connected(fixture("T+")));
  CHECK(is_frame_connected(fixture("K1")));
  CHECK_FALSE(is_frame_connected(SignedGraph(2)));
}

TEST_CASE("quasibalance") {
  CHECK(is_quasibalanced(fixture("T-")));
  CHECK_FALSE(is_quasibalanced(fixture("TIGHT")));
  CHECK_FALSE(is_quasibalanced(fixture("LOOSE")));
  CHECK(is_quasibalanced(fixture("T+")));
  CHECK(is_quasibalanced(fixture("UK4")));
  CHECK_THROWS_AS(is_quasibalanced(fixture("UK4"), 2), CycleBudgetExceeded);
}
