#include <algorithm>
#include <mutex>
#include <thread>

#include "facts.hpp"
#include "property_util.hpp"
#include "signcon/verify.hpp"

namespace signcon::verify {

const std::vector<Property>& properties() {
  static const std::vector<Property> all = [] {
    std::vector<Property> out;
    detail::add_basic_properties(out);
    detail::add_structure_properties(out);
    detail::add_matroid_properties(out);
    return out;
  }();
  return all;
}

bool SweepReport::all_hold() const { return first_failure() == nullptr; }

const PropertyResult* SweepReport::first_failure() const {
  for (const auto& r : results)
    if (r.violated > 0) return &r;
  return nullptr;
}

namespace {

struct Tally {
  std::size_t holds = 0, violated = 0, na = 0;
  std::optional<Counterexample> first;
};

void evaluate(const std::vector<const Property*>& selected, const SignedGraph& g, std::size_t index,
              bool random, std::vector<Tally>& tallies) {
  GraphFacts facts(g);
  for (std::size_t p = 0; p < selected.size(); ++p) {
    Outcome o;
    try {
      o = selected[p]->check(facts);
    } catch (const std::exception& e) {
      o = Outcome::violated(std::string("exception: ") + e.what());
    }
    Tally& t = tallies[p];
    switch (o.status) {
      case Status::NotApplicable: ++t.na; break;
      case Status::Holds: ++t.holds; break;
      case Status::Violated:
        ++t.violated;
        if (!t.first) t.first = Counterexample{index, random, g, o.detail};
        break;
    }
  }
}

bool earlier(const Counterexample& a, const Counterexample& b) {
  if (a.random != b.random) return !a.random;
  return a.index < b.index;
}

}  // namespace

SweepReport run_sweep(const SweepOptions& options) {
  std::vector<const Property*> selected;
  for (const auto& p : properties()) {
    const bool by_criterion = options.criteria.empty() ||
                              std::find(options.criteria.begin(), options.criteria.end(), p.criterion) !=
                                  options.criteria.end();
    const bool by_id =
        options.ids.empty() || std::find(options.ids.begin(), options.ids.end(), p.id) != options.ids.end();
    if (by_criterion && by_id) selected.push_back(&p);
  }

  const GraphSpace space(options.limits);
  const std::size_t random_count = options.seed ? options.random_samples : 0;
  const std::size_t total = space.size() + random_count;
  unsigned workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(total, 1)));

  // Worker k handles items k, k+workers, ...; each keeps its own earliest
  // counterexample, and the merge picks the lowest index overall.
  std::vector<std::vector<Tally>> per_worker(workers, std::vector<Tally>(selected.size()));
  auto run = [&](unsigned k) {
    for (std::size_t i = k; i < total; i += workers) {
      if (i < space.size()) {
        evaluate(selected, space.at(i), i, false, per_worker[k]);
      } else {
        const std::size_t r = i - space.size();
        const auto g = random_graph(*options.seed + r, options.limits.max_n + 2, options.limits.max_m + 2,
                                    options.limits.max_parallel);
        evaluate(selected, g, r, true, per_worker[k]);
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < workers; ++k) pool.emplace_back(run, k);
    for (auto& t : pool) t.join();
  }

  SweepReport report;
  report.exhaustive_graphs = space.size();
  report.random_graphs = random_count;
  for (std::size_t p = 0; p < selected.size(); ++p) {
    PropertyResult r;
    r.property = selected[p];
    for (const auto& w : per_worker) {
      const Tally& t = w[p];
      r.holds += t.holds;
      r.violated += t.violated;
      r.not_applicable += t.na;
      if (t.first && (!r.first || earlier(*t.first, *r.first))) r.first = t.first;
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace signcon::verify
