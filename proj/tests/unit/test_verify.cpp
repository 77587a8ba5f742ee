#include <set>

#include "doctest.h"
#include "signcon/graph_io.hpp"
#include "signcon/verify.hpp"

using namespace signcon;

TEST_CASE("graph space enumerates distinct graphs in order") {
  verify::GeneratorLimits lim;
  lim.max_n = 2;
  lim.max_m = 2;
  const verify::GraphSpace space(lim);
  std::set<std::string> seen;
  int last_n = 0, last_m = 0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    const auto g = space.at(i);
    CHECK(seen.insert(emit_graph(g)).second);
    CHECK((g.vertex_count() > last_n || (g.vertex_count() == last_n && g.edge_count() >= last_m)));
    last_n = g.vertex_count();
    last_m = g.edge_count();
  }
  CHECK(space.at(0).vertex_count() == 1);
  CHECK(space.at(0).edge_count() == 0);
  // One vertex: no edge, one loop of either sign, two loops with four signings.
  lim.max_n = 1;
  CHECK(verify::GraphSpace(lim).size() == 7);
}

TEST_CASE("random graphs are reproducible") {
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    CHECK(emit_graph(verify::random_graph(seed, 5, 6, 2)) == emit_graph(verify::random_graph(seed, 5, 6, 2)));
  }
}

TEST_CASE("small sweep holds and reports the two-vertex counterexample") {
  verify::SweepOptions opt;
  opt.limits.max_n = 1;
  opt.limits.max_m = 2;
  CHECK(verify::run_sweep(opt).all_hold());

  opt.limits.max_n = 2;
  opt.limits.max_m = 1;
  opt.threads = 3;
  const auto report = verify::run_sweep(opt);
  CHECK_FALSE(report.all_hold());
  const auto* f = report.first_failure();
  REQUIRE(f);
  CHECK(f->property->id == "matroid.frame-connected-sign");
  CHECK(emit_graph(f->first->graph) == emit_graph(fixture("P2")));
}

TEST_CASE("sweep is deterministic across thread counts") {
  verify::SweepOptions opt;
  opt.limits.max_n = 3;
  opt.limits.max_m = 3;
  opt.seed = 7;
  opt.random_samples = 100;
  opt.threads = 1;
  const auto a = verify::run_sweep(opt);
  opt.threads = 4;
  const auto b = verify::run_sweep(opt);
  REQUIRE(a.results.size() == b.results.size());
  CHECK(a.random_graphs == 100);
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    CHECK(a.results[i].holds == b.results[i].holds);
    CHECK(a.results[i].violated == b.results[i].violated);
    CHECK(a.results[i].first.has_value() == b.results[i].first.has_value());
    if (a.results[i].first) CHECK(a.results[i].first->index == b.results[i].first->index);
  }
}

TEST_CASE("sweep filters by criterion and id") {
  verify::SweepOptions opt;
  opt.limits.max_n = 2;
  opt.limits.max_m = 2;
  opt.criteria = {7};
  const auto r = verify::run_sweep(opt);
  CHECK(r.all_hold());
  for (const auto& p : r.results) CHECK(p.property->criterion == 7);
  opt.criteria.clear();
  opt.ids = {"balance.oracle"};
  const auto one = verify::run_sweep(opt);
  REQUIRE(one.results.size() == 1);
  CHECK(one.results[0].property->id == "balance.oracle");
}
