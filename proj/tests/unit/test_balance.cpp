#include "doctest.h"
#include "helpers.hpp"
#include "signcon/balance.hpp"
#include "signcon/errors.hpp"

using namespace signcon;

TEST_CASE("is_balanced") {
  CHECK(is_balanced(fixture("T+")));
  CHECK_FALSE(is_balanced(fixture("T-")));
  CHECK_FALSE(is_balanced(fixture("NEGLOOP")));
  CHECK(is_balanced(fixture("K1")));
  CHECK(is_balanced(SignedGraph(0)));
}

TEST_CASE("harary bipartition") {
  const auto tp = harary_bipartition(fixture("T+"));
  REQUIRE(tp);
  CHECK(tp->switching_set().empty());
  const auto n2 = harary_bipartition(fixture("N2"));
  REQUIRE(n2);
  CHECK(n2->switching_set() == std::vector<VertexId>{1});
  CHECK_FALSE(harary_bipartition(fixture("T-")));
  const auto c4 = harary_bipartition(SignedGraph(4, {{0, 1, Sign::Negative}, {2, 3, Sign::Negative}}));
  REQUIRE(c4);
  CHECK(c4->parts.size() == 2);
  CHECK(c4->switching_set() == std::vector<VertexId>{1, 3});
}

TEST_CASE("balancing edges") {
  CHECK(balancing_edges(fixture("T-")) == std::vector<EdgeId>{0, 1, 2});
  CHECK(balancing_edges(fixture("TIGHT")).empty());
  CHECK(balancing_edges(fixture("T+")).empty());
  CHECK(balancing_edges(fixture("NEGLOOP+P")) == std::vector<EdgeId>{0});
}

TEST_CASE("balancing edge conditions") {
  const auto t = check_balancing_edge_equivalences(fixture("T-"), 2);
  CHECK(t.values() == std::array<bool, 5>{true, true, true, true, true});
  for (EdgeId e = 0; e < 6; ++e) {
    const auto c = check_balancing_edge_equivalences(fixture("TIGHT"), e);
    CHECK(c.values() == std::array<bool, 5>{false, false, false, false, false});
  }
  const auto loop = check_balancing_edge_equivalences(fixture("NEGLOOP"), 0);
  CHECK(loop.deletion_balances);
  CHECK(loop.all_equal());
  CHECK_THROWS_AS(check_balancing_edge_equivalences(fixture("T+"), 0), PreconditionError);
  CHECK_THROWS_AS(check_balancing_edge_equivalences(fixture("T-"), 9), EdgeOutOfRange);
}

TEST_CASE("balancing vertices") {
  CHECK(balancing_vertices(fixture("T-")) == std::vector<VertexId>{0, 1, 2});
  CHECK(balancing_vertices(fixture("UK4")) == std::vector<VertexId>{0, 1});
  CHECK(balancing_vertices(fixture("LOOSE")).empty());
}
