#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "signcon/core.hpp"

namespace signcon::verify {

struct GeneratorLimits {
  int min_n = 1;
  int max_n = 4;
  int max_m = 5;
  int max_parallel = 2;  // copies of one vertex pair (or loop)
};

/// Every signed multigraph within the limits, in a fixed order: by n, then
/// m, then edge multiset (slots u <= v in lexicographic order), then signing
/// as a bit pattern over edge ids.
class GraphSpace {
 public:
  explicit GraphSpace(const GeneratorLimits& limits);
  std::size_t size() const noexcept { return total_; }
  SignedGraph at(std::size_t index) const;

 private:
  struct Shape {
    int n;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::size_t offset;
  };
  std::vector<Shape> shapes_;
  std::size_t total_ = 0;
};

/// Uniform-ish random signed multigraph with the same slot rules.
SignedGraph random_graph(std::uint64_t seed, int max_n, int max_m, int max_parallel);

enum class Status { NotApplicable, Holds, Violated };

struct Outcome {
  Status status = Status::NotApplicable;
  std::string detail;

  static Outcome na() { return {}; }
  static Outcome holds() { return {Status::Holds, {}}; }
  static Outcome violated(std::string why) { return {Status::Violated, std::move(why)}; }
};

class GraphFacts;

struct Property {
  std::string id;
  int criterion = 0;  // acceptance criterion, 0 when not tied to one
  std::string statement;
  std::function<Outcome(GraphFacts&)> check;
};

/// Registered properties in a fixed order.
const std::vector<Property>& properties();

struct Counterexample {
  std::size_t index = 0;
  bool random = false;
  SignedGraph graph;
  std::string detail;
};

struct PropertyResult {
  const Property* property = nullptr;
  std::size_t holds = 0;
  std::size_t violated = 0;
  std::size_t not_applicable = 0;
  std::optional<Counterexample> first;  // lowest index; exhaustive phase before random
};

struct SweepOptions {
  GeneratorLimits limits;
  std::optional<std::uint64_t> seed;  // enables the random phase
  std::size_t random_samples = 2000;
  unsigned threads = 0;        // 0 picks the hardware concurrency
  std::vector<int> criteria;   // empty runs every property
  std::vector<std::string> ids;  // property ids to run; empty runs all
};

struct SweepReport {
  std::size_t exhaustive_graphs = 0;
  std::size_t random_graphs = 0;
  std::vector<PropertyResult> results;

  bool all_hold() const;
  /// First failing result in registry order, if any.
  const PropertyResult* first_failure() const;
};

SweepReport run_sweep(const SweepOptions& options);

}  // namespace signcon::verify
