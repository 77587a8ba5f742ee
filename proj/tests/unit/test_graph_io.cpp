#include "doctest.h"
#include "signcon/errors.hpp"
#include "signcon/format.hpp"
#include "signcon/graph_io.hpp"

using namespace signcon;

TEST_CASE("parse a negative edge and a negative loop") {
  const auto n2 = parse_graph("signed-graph n=2\n0 1 -\n");
  CHECK(n2.vertex_count() == 2);
  REQUIRE(n2.edge_count() == 1);
  CHECK(n2.edge(0).sign == Sign::Negative);
  CHECK(emit_graph(n2) == emit_graph(fixture("N2")));
  const auto loop = parse_graph("signed-graph n=1\n0 0 -\n");
  CHECK(loop.edge(0).is_loop());
  CHECK(emit_graph(loop) == emit_graph(fixture("NEGLOOP")));
}

TEST_CASE("comments, blank lines and parallel edges") {
  const auto g = parse_graph("# digon\nsigned-graph n=2\n\n0 1 +\n# again\n0 1 -\n");
  CHECK(g.edge_count() == 2);
  CHECK(emit_graph(g) == emit_graph(fixture("NECK2")));
}

TEST_CASE("every fixture round trips") {
  for (const auto& name : fixture_names()) {
    const auto text = emit_graph(fixture(name));
    CHECK(emit_graph(parse_graph(text)) == text);
  }
  CHECK(fixture_file_name("T-") == "T-.sg");
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_graph("signed-graph n=2\n0 1 +\n0 2 -\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::VertexOutOfRange);
    CHECK(e.line() == 3);
  }
  try {
    parse_graph("signed-graph n=2\n0 1 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::Syntax);
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_graph("graph n=2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph(""), ParseError);
}

TEST_CASE("edge selections") {
  const auto g = fixture("LOOSE");
  CHECK(parse_edge_selection("all", g).size() == 7);
  CHECK(parse_edge_selection("none", g).empty());
  CHECK(parse_edge_selection("6,0", g) == std::vector<EdgeId>{6, 0});
  CHECK_THROWS_AS(parse_edge_selection("7", g), EdgeOutOfRange);
  CHECK_THROWS(parse_edge_selection("1,x", g));
  CHECK(join_ids(std::vector<int>{}) == "");
  CHECK(join_ids(std::vector<int>{0, 3}) == "0 3");
}
