#include "doctest.h"
#include "helpers.hpp"
#include "signcon/errors.hpp"
#include "signcon/sign_connectivity.hpp"

using namespace signcon;
using test::Classes;

TEST_CASE("sign components") {
  CHECK(sign_components(fixture("T-")).classes == Classes{{0, 1, 2}});
  CHECK(sign_components(fixture("T+")).classes == Classes{{0}, {1}, {2}});
  CHECK(sign_components(fixture("LOOSE")).classes == Classes{{0, 1, 2, 3, 4, 5}});
  CHECK(sign_components(fixture("T-P")).classes == Classes{{0, 1, 2, 3}});
}

TEST_CASE("is_sign_connected") {
  CHECK(is_sign_connected(fixture("K1")));
  CHECK(is_sign_connected(SignedGraph(0)));
  CHECK_FALSE(is_sign_connected(fixture("T+")));
  CHECK(is_sign_connected(fixture("TIGHT")));
  CHECK(is_sign_connected(fixture("NEGLOOP")));
  CHECK_FALSE(is_sign_connected(SignedGraph(2)));
}

TEST_CASE("witness chains") {
  const auto g = fixture("T-");
  const auto w = witness_chains(g, 0, 1);
  CHECK(w.positive.edge_ids() == std::vector<EdgeId>{0});
  CHECK(w.negative.edge_ids() == std::vector<EdgeId>{2, 1});
  CHECK(walk_sign(g, w.negative) == Sign::Negative);
  CHECK_THROWS_AS(witness_chains(fixture("T+"), 0, 1), NotSignConnected);
  const auto loop = witness_chains(fixture("NEGLOOP"), 0, 0);
  CHECK(loop.positive.steps.empty());
  CHECK(loop.negative.edge_ids() == std::vector<EdgeId>{0});
}

TEST_CASE("sign isthmi") {
  CHECK(sign_isthmi(fixture("T-")) == std::vector<EdgeId>{0, 1, 2});
  CHECK(sign_isthmi(fixture("TIGHT")).empty());
  CHECK(sign_isthmi(fixture("LOOSE")) == std::vector<EdgeId>{6});
  CHECK_THROWS_AS(sign_isthmi(fixture("T+")), PreconditionError);
  CHECK_THROWS_AS(sign_isthmi(fixture("NEGLOOP")), PreconditionError);
}

TEST_CASE("sign articulation vertices and sign blocks") {
  CHECK(sign_articulation_vertices(fixture("T-")) == std::vector<VertexId>{0, 1, 2});
  CHECK(sign_articulation_vertices(fixture("TIGHT")) == std::vector<VertexId>{0});
  CHECK(sign_articulation_vertices(fixture("LOOSE")) == std::vector<VertexId>{0, 3});
  CHECK_FALSE(is_sign_block(fixture("T-")));
  CHECK_FALSE(is_sign_block(fixture("UK4")));
  CHECK(is_sign_block(fixture("DISJB")));
  CHECK_THROWS_AS(is_sign_block(fixture("C4")), PreconditionError);
}

TEST_CASE("positive and negative components") {
  CHECK(positive_components(fixture("T+")).classes == Classes{{0, 1, 2}});
  CHECK(positive_components(fixture("N2")).classes == Classes{{0}, {1}});
  CHECK(positive_components(fixture("T-")).classes == Classes{{0, 1, 2}});
  CHECK(negative_components(fixture("N2")).classes == Classes{{0, 1}});
  CHECK(negative_components(fixture("T+")).classes == Classes{{0}, {1}, {2}});
  CHECK(negative_components(fixture("T-")).classes == Classes{{0, 1, 2}});
}

TEST_CASE("parity connection") {
  CHECK(is_parity_connected(fixture("C5")));
  CHECK_FALSE(is_parity_connected(fixture("C4")));
  CHECK(is_parity_connected(fixture("K1")));
  const auto flipped = all_negative(fixture("T+"));
  for (const Edge& e : flipped.edges()) CHECK(e.sign == Sign::Negative);
}
