#include "doctest.h"
#include "helpers.hpp"
#include "signcon/errors.hpp"
#include "signcon/structure.hpp"

using namespace signcon;

TEST_CASE("blocks of LOOSE") {
  const auto d = block_decomposition(fixture("LOOSE"));
  REQUIRE(d.blocks.size() == 3);
  CHECK(d.blocks[0].edges == std::vector<EdgeId>{0, 1, 2});
  CHECK(d.blocks[1].edges == std::vector<EdgeId>{3, 4, 5});
  CHECK(d.blocks[2].edges == std::vector<EdgeId>{6});
  CHECK(d.articulation_vertices == std::vector<VertexId>{0, 3});
  for (const auto& b : d.blocks) CHECK(b.inner);
  REQUIRE(d.cores.size() == 1);
  CHECK(d.cores[0].edges == test::all_edges(fixture("LOOSE")));
  CHECK_FALSE(d.cores[0].necklace);
}

TEST_CASE("blocks of NECK2") {
  const auto d = block_decomposition(fixture("NECK2"));
  REQUIRE(d.blocks.size() == 1);
  CHECK_FALSE(d.blocks[0].balanced);
  CHECK(d.blocks[0].inner);
  REQUIRE(d.cores.size() == 1);
  REQUIRE(d.cores[0].necklace);
  CHECK(*d.cores[0].necklace == Necklace{{0}, {1}});
}

TEST_CASE("balanced graphs have no inner block") {
  const auto d = block_decomposition(fixture("T+P"));
  REQUIRE(d.blocks.size() == 2);
  CHECK(d.blocks[0].edges == std::vector<EdgeId>{0, 1, 2});
  CHECK(d.blocks[1].edges == std::vector<EdgeId>{3});
  for (const auto& b : d.blocks) CHECK_FALSE(b.inner);
  CHECK(d.cores.empty());
}

TEST_CASE("loops and isolated vertices are blocks") {
  const SignedGraph g(3, {{0, 0, Sign::Negative}, {0, 1, Sign::Positive}});
  const auto d = block_decomposition(g);
  REQUIRE(d.blocks.size() == 3);
  CHECK(d.blocks[0].is_loop());
  CHECK(d.blocks[2].edges.empty());
  CHECK(d.blocks[2].vertices == std::vector<VertexId>{2});
  CHECK(d.articulation_vertices == std::vector<VertexId>{0});
  CHECK(d.blocks[0].inner);
  CHECK_FALSE(d.blocks[1].inner);
}

TEST_CASE("pendant balanced blocks stay outer") {
  const auto d = block_decomposition(fixture("T-P"));
  CHECK(d.blocks[0].inner);
  CHECK_FALSE(d.blocks[1].inner);
}

TEST_CASE("isthmi") {
  CHECK(isthmi(fixture("LOOSE")) == std::vector<EdgeId>{6});
  CHECK(isthmi(fixture("NEGLOOP+P")) == std::vector<EdgeId>{1});
  CHECK(isthmi(fixture("NECK2")).empty());
}

TEST_CASE("necklaces") {
  CHECK(*detect_necklace(fixture("NECK2"), std::vector<EdgeId>{0, 1}) == Necklace{{0}, {1}});
  CHECK(*detect_necklace(fixture("T-"), std::vector<EdgeId>{0, 1, 2}) == Necklace{{0}, {1}, {2}});
  const auto tight = fixture("TIGHT");
  CHECK(detect_necklace(tight, std::vector<EdgeId>{3, 4, 5})->size() == 3);
  CHECK_FALSE(detect_necklace(fixture("T+"), std::vector<EdgeId>{0, 1, 2}));
  CHECK_FALSE(detect_necklace(fixture("NEGLOOP"), std::vector<EdgeId>{0}));
  CHECK(*detect_necklace(fixture("UK4"), test::all_edges(fixture("UK4"))) == Necklace{{0}, {1, 2, 3, 4, 5}});
  CHECK_THROWS_AS(detect_necklace(tight, std::vector<EdgeId>{0, 1}), NotABlock);
}

TEST_CASE("necklace with a triangle constituent") {
  // Positive triangle 0-1-2 and a path 0-3-2 of opposite sign: every
  // negative cycle passes through 0, 2 and 3.
  const SignedGraph g(4, {{0, 1, Sign::Positive}, {1, 2, Sign::Positive}, {0, 2, Sign::Positive},
                          {0, 3, Sign::Positive}, {3, 2, Sign::Negative}});
  const auto n = detect_necklace(g, test::all_edges(g));
  REQUIRE(n);
  CHECK(*n == Necklace{{0, 1, 2}, {3}, {4}});
}

TEST_CASE("necklace order is cyclic from the smallest edge") {
  // Square 0-1-2-3 with the edge 3-0 doubled: constituents around the cycle.
  const SignedGraph g(4, {{0, 1, Sign::Positive}, {2, 3, Sign::Positive}, {1, 2, Sign::Positive},
                          {3, 0, Sign::Negative}});
  CHECK(*detect_necklace(g, test::all_edges(g)) == Necklace{{0}, {2}, {1}, {3}});
}

TEST_CASE("cactus and contrabalance") {
  CHECK(is_contrabalanced(fixture("TIGHT")));
  CHECK_FALSE(is_contrabalanced(fixture("THETA")));
  CHECK(is_contrabalanced(fixture("P2")));
  CHECK(is_contrabalanced(fixture("NEGLOOP+P")));
  CHECK_FALSE(is_contrabalanced(fixture("T+")));
  CHECK(is_cactus_forest(fixture("TIGHT")));
  CHECK_FALSE(is_cactus_forest(fixture("THETA")));
  CHECK(is_cactus_forest(fixture("K1")));
  CHECK(is_cactus_forest(fixture("NECK2")));
}

TEST_CASE("theta") {
  const auto t = contains_theta(fixture("THETA"));
  REQUIRE(t);
  CHECK(std::min(t->a, t->b) == 0);
  CHECK(std::max(t->a, t->b) == 1);
  CHECK(t->chains[0] == std::vector<EdgeId>{0});
  CHECK_FALSE(contains_theta(fixture("TIGHT")));
  CHECK(contains_theta(fixture("K4")));
}

TEST_CASE("hypercyclic chains") {
  const auto tp = fixture("T-P");
  const auto v = classify_hypercyclic(tp, make_walk(tp, 3, std::vector<EdgeId>{3, 0, 1, 2}));
  CHECK(v.type == HypercyclicType::DisjointArms);
  CHECK(v.cycle == std::vector<EdgeId>{0, 1, 2});
  CHECK(v.arm_x == std::vector<EdgeId>{3});
  CHECK(v.arm_y.empty());
  CHECK(v.attachment == 0);

  const auto tm = fixture("T-");
  const auto bare = classify_hypercyclic(tm, make_walk(tm, 0, std::vector<EdgeId>{0, 1, 2}));
  CHECK(bare.type == HypercyclicType::DisjointArms);
  CHECK(bare.arm_x.empty());

  const auto th = fixture("THETA");
  const auto pos = classify_hypercyclic(th, make_walk(th, 0, std::vector<EdgeId>{1, 2, 0}));
  CHECK(pos.type == HypercyclicType::NotHypercyclic);
}

TEST_CASE("hypercyclic chain with a shared arm") {
  // Path 3-4 hanging from a pendant 4-0 onto the negative triangle; walk
  // 3,4,0,1,2,0,4 shares the segment 4-0.
  const SignedGraph g(5, {{0, 1, Sign::Positive}, {1, 2, Sign::Positive}, {2, 0, Sign::Negative},
                          {3, 4, Sign::Positive}, {4, 0, Sign::Positive}});
  const auto w = make_walk(g, 3, std::vector<EdgeId>{3, 4, 0, 1, 2, 4});
  const auto v = classify_hypercyclic(g, w);
  CHECK(v.type == HypercyclicType::SharedArm);
  CHECK(v.shared == std::vector<EdgeId>{4});
  const auto twice = make_walk(g, 3, std::vector<EdgeId>{3, 4, 0, 1, 2, 0, 1, 2, 4});
  CHECK(classify_hypercyclic(g, twice).type == HypercyclicType::NotHypercyclic);
}
