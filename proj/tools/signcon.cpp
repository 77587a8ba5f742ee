// Command line front end: every command parses a graph file, calls the
// library, and prints the answer.

#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "signcon/balance.hpp"
#include "signcon/errors.hpp"
#include "signcon/format.hpp"
#include "signcon/graph_io.hpp"
#include "signcon/matroid.hpp"
#include "signcon/oracle.hpp"
#include "signcon/report.hpp"
#include "signcon/sign_connectivity.hpp"
#include "signcon/structure.hpp"
#include "signcon/verify.hpp"

namespace {

using namespace signcon;

constexpr int kViolation = 2;

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string cover_label(const CoverVertex& c) {
  return "(" + std::to_string(c.vertex) + "," + to_char(c.sheet) + ")";
}

std::string signs(const SignSet& s) {
  std::string out;
  if (s.positive) out += '+';
  if (s.negative) out += '-';
  return out.empty() ? "none" : out;
}

std::string walk_line(char sign, const Walk& w) {
  const auto ids = w.edge_ids();
  return ids.empty() ? std::string(1, sign) : sign + (" " + join_ids(ids));
}

std::string labelled(const std::string& label, const std::vector<int>& ids) {
  return ids.empty() ? label : label + " " + join_ids(ids);
}

void print_partition(const ComponentPartition& p) { std::cout << format_partition(p); }

/// Sign isthmi or sign articulation vertices: the answer for a sign-connected
/// graph, otherwise one line per sign component with two or more vertices.
template <typename Fn>
void per_sign_component(const SignedGraph& g, const std::string& tag, Fn compute) {
  if (is_sign_connected(g) && g.vertex_count() > 1) {
    std::cout << join_ids(compute(g)) << "\n";
    return;
  }
  const auto report = analyze(g);
  const auto& list = tag == "sign_isthmus" ? report.isthmi : report.articulation;
  for (const auto& t : list) {
    if (t.component.empty()) continue;
    std::cout << labelled("component " + join_ids(t.component) + ":", t.ids) << "\n";
  }
}

int run_check(int max_n, int max_m, std::optional<std::uint64_t> seed, unsigned threads,
              const std::vector<int>& criteria, const std::vector<std::string>& ids, bool quiet) {
  verify::SweepOptions opt;
  opt.limits.max_n = max_n;
  opt.limits.max_m = max_m;
  opt.seed = seed;
  opt.threads = threads;
  opt.criteria = criteria;
  opt.ids = ids;
  const auto report = verify::run_sweep(opt);
  std::cout << "graphs: " << report.exhaustive_graphs << " exhaustive, " << report.random_graphs
            << " random\n";
  if (!quiet) {
    for (const auto& r : report.results) {
      std::cout << (r.violated ? "FAIL " : "ok   ") << r.property->id << " holds=" << r.holds
                << " violated=" << r.violated << " n/a=" << r.not_applicable << "\n";
    }
  }
  const auto* failure = report.first_failure();
  if (!failure) return 0;
  const auto& c = *failure->first;
  std::cout << "counterexample to " << failure->property->id << " (" << failure->property->statement
            << ")\n";
  std::cout << "graph " << (c.random ? "random #" : "#") << c.index << ": " << c.detail << "\n";
  std::cout << emit_graph(c.graph);
  return kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sign connection analysis of signed graphs"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string file;
  std::string kind;
  std::string edges;
  auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "graph file")->required(); };
  auto load = [&] { return read_graph_file(file); };

  // Walks, switching and the double cover.
  {
    auto* sub = app.add_subcommand("walk-sign", "sign of a walk");
    add_file(sub);
    static VertexId start = 0;
    sub->add_option("start", start)->required();
    sub->add_option("edges", edges, "comma separated edge ids")->required();
    sub->callback([&] {
      action = [&] {
        const auto g = load();
        std::cout << to_char(walk_sign(g, make_walk(g, start, parse_edge_selection(edges, g)))) << "\n";
        return 0;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("switch", "switch a vertex set and print the graph");
    add_file(sub);
    static std::string set;
    sub->add_option("vertices", set, "comma separated vertex ids, or none")->required();
    sub->callback([&] {
      action = [&] {
        const auto g = load();
        std::vector<VertexId> w;
        if (set != "none") {
          std::stringstream in(set);
          for (std::string item; std::getline(in, item, ',');) w.push_back(std::stoi(item));
        }
        std::cout << emit_graph(switched(g, w));
        return 0;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("cover", "signed double cover");
    add_file(sub);
    sub->callback([&] {
      action = [&] {
        const auto cover = double_cover(load());
        std::cout << "vertices " << cover.vertices.size() << "\n";
        for (const auto& e : cover.edges) {
          std::cout << "edge " << e.base << ": " << cover_label(cover.vertices[e.from]) << " "
                    << cover_label(cover.vertices[e.to]) << "\n";
        }
        for (const auto& comp : cover.components()) {
          std::cout << "component";
          for (int i : comp) std::cout << " " << cover_label(cover.vertices[i]);
          std::cout << "\n";
        }
        return 0;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("reach", "signs of chains from a vertex");
    add_file(sub);
    static VertexId x = 0;
    static bool oracle_mode = false;
    sub->add_option("x", x)->required();
    sub->add_flag("--oracle", oracle_mode, "use the brute-force oracle");
    sub->callback([&] {
      action = [&] {
        const auto g = load();
        const auto r = oracle_mode ? oracle::reachable_signs(g, x) : sign_reachability(g, x);
        for (VertexId v = 0; v < g.vertex_count(); ++v) std::cout << v << ": " << signs(r[v]) << "\n";
        return 0;
      };
    });
  }

  // Balance.
  {
    auto* sub = app.add_subcommand("balanced", "whether every cycle is positive");
    add_file(sub);
    sub->callback([&] { action = [&] { std::cout << yes_no(is_balanced(load())) << "\n"; return 0; }; });
  }
  {
    auto* sub = app.add_subcommand("harary", "Harary bipartition of each component");
    add_file(sub);
    sub->callback([&] {
      action = [&] {
        const auto h = harary_bipartition(load());
        if (!h) {
          std::cout << "unbalanced\n";
          return 0;
        }
        for (const auto& p : h->parts)
          std::cout << labelled("component " + join_ids(p.component) + ": switched", p.switched) << "\n";
        return 0;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("balancing", "balancing edges or vertices");
    add_file(sub);
    sub->add_option("--kind", kind, "edges or vertices")->check(CLI::IsMember({"edges", "vertices"}))->required();
    sub->callback([&] {
      action = [&] {
        const auto g = load();
        std::cout << join_ids(kind == "edges" ? balancing_edges(g) : balancing_vertices(g)) << "\n";
        return 0;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("equivalences", "the five balancing-edge conditions for one edge");
    add_file(sub);
    static EdgeId e = 0;
    sub->add_option("edge", e)->required();
    sub->callback([&] {
      action = [&] {
        const auto c = check_balancing_edge_equivalences(load(), e);
        std::string out;
        for (bool b : c.values()) out += out.empty() ? (b ? "T" : "F") : (b ? " T" : " F");
        std::cout << out << "\n";
        return 0;
      };
    });
  }

  // Connection.
  {
    auto* sub = app.add_subcommand("components", "component partition");
    add_file(sub);
    sub->add_option("--kind", kind)
        ->check(CLI::IsMember({"graph", "sign", "frame", "lift", "positive", "negative"}))
        ->required();
    sub->callback([&] {
      action = [&] {
        const auto g = load();
        if (kind == "graph") print_partition(graph_components(g));
        if (kind == "sign") print_partition(sign_components(g));
        if (kind == "positive") print_partition(positive_components(g));
        if (kind == "negative") print_partition(negative_components(g));
        if (kind == "frame") print_partition(frame_components(g));
        if (kind == "lift") print_partition(lift_components(g));
        return 0;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("connected", "connection of a kind");
    add_file(sub);
    sub->add_option("--kind", kind)->check(CLI::IsMember({"sign", "parity", "frame", "lift"}))->required();
    sub->callback([&] {
      action = [&] {
        const auto g = load();
        bool answer = false;
        if (kind == "sign") answer = is_sign_connected(g);
        if (kind == "parity") answer = is_parity_connected(g);
        if (kind == "frame") answer = is_frame_connected(g);
        if (kind == "lift") answer = is_lift_connected(g);
        std::cout << yes_no(answer) << "\n";
        return 0;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("isthmi", "isthmi of a kind");
    add_file(sub);
    sub->add_option("--kind", kind)->check(CLI::IsMember({"graph", "sign", "frame", "lift"}))->required();
    sub->callback([&] {
      action = [&] {
        const auto g = load();
        if (kind == "sign") {
          per_sign_component(g, "sign_isthmus", [](const SignedGraph& h) { return sign_isthmi(h); });
          return 0;
        }
        const auto ids = kind == "graph" ? isthmi(g) : kind == "frame" ? frame_isthmi(g) : lift_isthmi(g);
        std::cout << join_ids(ids) << "\n";
        return 0;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("articulation", "articulation vertices of a kind");
    add_file(sub);
    sub->add_option("--kind", kind)->check(CLI::IsMember({"graph", "sign"}))->required();
    sub->callback([&] {
      action = [&] {
        const auto g = load();
        if (kind == "graph") {
          std::cout << join_ids(articulation_vertices(g)) << "\n";
        } else {
          per_sign_component(g, "sign_articulation",
                             [](const SignedGraph& h) { return sign_articulation_vertices(h); });
        }
        return 0;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("sign-block", "whether a sign-connected graph is a sign block");
    add_file(sub);
    sub->callback([&] { action = [&] { std::cout << yes_no(is_sign_block(load())) << "\n"; return 0; }; });
  }
  {
    auto* sub = app.add_subcommand("witness", "a positive and a negative chain from x to y");
    add_file(sub);
    static VertexId x = 0, y = 0;
    sub->add_option("x", x)->required();
    sub->add_option("y", y)->required();
    sub->callback([&] {
      action = [&] {
        const auto w = witness_chains(load(), x, y);
        std::cout << walk_line('+', w.positive) << "\n" << walk_line('-', w.negative) << "\n";
        return 0;
      };
    });
  }

  // Matroids.
  {
    auto* sub = app.add_subcommand("rank", "frame or lift rank of an edge set");
    add_file(sub);
    sub->add_option("--kind", kind)->check(CLI::IsMember({"frame", "lift"}))->required();
    sub->add_option("--edges", edges, "comma separated ids, all, or none")->required();
    sub->callback([&] {
      action = [&] {
        const auto g = load();
        const auto F = parse_edge_selection(edges, g);
        std::cout << (kind == "frame" ? frame_rank(g, F) : lift_rank(g, F)) << "\n";
        return 0;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("circuit", "classify an edge set as a circuit");
    add_file(sub);
    sub->add_option("--edges", edges, "comma separated ids, all, or none")->required();
    sub->callback([&] {
      action = [&] {
        const auto g = load();
        std::cout << format_circuit(classify_circuit(g, parse_edge_selection(edges, g))) << "\n";
        return 0;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("quasibalanced", "whether any two negative cycles share two vertices");
    add_file(sub);
    sub->callback([&] { action = [&] { std::cout << yes_no(is_quasibalanced(load())) << "\n"; return 0; }; });
  }

  // Structure.
  {
    auto* sub = app.add_subcommand("blocks", "blocks, articulation vertices and cores");
    add_file(sub);
    sub->callback([&] {
      action = [&] {
        const auto d = block_decomposition(load());
        for (const auto& b : d.blocks) {
          std::cout << "block " << (b.edges.empty() ? "vertex " + join_ids(b.vertices) : join_ids(b.edges))
                    << (b.balanced ? " balanced" : " unbalanced") << (b.inner ? " inner" : " outer") << "\n";
        }
        std::cout << labelled("articulation", d.articulation_vertices) << "\n";
        for (const auto& c : d.cores) {
          std::cout << "core " << join_ids(c.edges);
          if (c.necklace) {
            std::cout << " necklace";
            for (const auto& part : *c.necklace) std::cout << " [" << join_ids(part) << "]";
          }
          std::cout << "\n";
        }
        return 0;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("necklace", "necklace constituents of a block");
    add_file(sub);
    sub->add_option("--edges", edges, "edge ids of the block, or all")->required();
    sub->callback([&] {
      action = [&] {
        const auto g = load();
        const auto n = detect_necklace(g, parse_edge_selection(edges, g));
        if (!n) {
          std::cout << "none\n";
          return 0;
        }
        for (const auto& part : *n) std::cout << join_ids(part) << "\n";
        return 0;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("contrabalanced", "whether there is no positive cycle");
    add_file(sub);
    sub->callback([&] { action = [&] { std::cout << yes_no(is_contrabalanced(load())) << "\n"; return 0; }; });
  }
  {
    auto* sub = app.add_subcommand("cactus", "whether every block is a cycle, an edge or K1");
    add_file(sub);
    sub->callback([&] { action = [&] { std::cout << yes_no(is_cactus_forest(load())) << "\n"; return 0; }; });
  }
  {
    auto* sub = app.add_subcommand("theta", "a theta subgraph");
    add_file(sub);
    sub->callback([&] {
      action = [&] {
        const auto t = contains_theta(load());
        if (!t) {
          std::cout << "none\n";
          return 0;
        }
        std::cout << "ends " << t->a << " " << t->b << "\n";
        for (const auto& c : t->chains) std::cout << join_ids(c) << "\n";
        return 0;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("hypercyclic", "shape of a chain");
    add_file(sub);
    static VertexId start = 0;
    sub->add_option("start", start)->required();
    sub->add_option("edges", edges, "comma separated edge ids")->required();
    sub->callback([&] {
      action = [&] {
        const auto g = load();
        const auto v = classify_hypercyclic(g, make_walk(g, start, parse_edge_selection(edges, g)));
        if (v.type == HypercyclicType::NotHypercyclic) {
          std::cout << "not-hypercyclic: " << v.reason << "\n";
          return 0;
        }
        std::cout << (v.type == HypercyclicType::DisjointArms ? "disjoint-arms" : "shared-arm") << "\n"
                  << labelled("cycle", v.cycle) << "\n"
                  << labelled("arm-x", v.arm_x) << "\n"
                  << labelled("arm-y", v.arm_y) << "\n"
                  << labelled("shared", v.shared) << "\n"
                  << "attachment " << v.attachment << "\n";
        return 0;
      };
    });
  }

  // Brute-force oracle.
  {
    auto* sub = app.add_subcommand("cycles", "elementary cycles by enumeration");
    add_file(sub);
    sub->callback([&] {
      action = [&] {
        for (const auto& c : oracle::enumerate_elementary_cycles(load()))
          std::cout << to_char(c.sign) << " " << join_ids(c.edges) << "\n";
        return 0;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("chains", "signs of all chains from x to y up to a length");
    add_file(sub);
    static VertexId x = 0, y = 0;
    static std::size_t length = 6;
    sub->add_option("x", x)->required();
    sub->add_option("y", y)->required();
    sub->add_option("--max-length", length)->capture_default_str();
    sub->callback([&] {
      action = [&] {
        oracle::EnumerationBudget b;
        b.max_chain_length = length;
        const auto c = oracle::enumerate_chains(load(), x, y, b);
        SignSet s;
        if (!c.positive.empty()) s.insert(Sign::Positive);
        if (!c.negative.empty()) s.insert(Sign::Negative);
        std::cout << signs(s) << "\n";
        return 0;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("circuits", "frame or lift circuits by enumeration");
    add_file(sub);
    sub->add_option("--kind", kind)->check(CLI::IsMember({"frame", "lift"}))->required();
    sub->callback([&] {
      action = [&] {
        const auto g = load();
        for (const auto& c : kind == "frame" ? oracle::enumerate_frame_circuits(g) : oracle::enumerate_lift_circuits(g))
          std::cout << join_ids(c) << "\n";
        return 0;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("circuit-rank", "rank derived from enumerated circuits");
    add_file(sub);
    sub->add_option("--kind", kind)->check(CLI::IsMember({"frame", "lift"}))->required();
    sub->add_option("--edges", edges, "comma separated ids, all, or none")->required();
    sub->callback([&] {
      action = [&] {
        const auto g = load();
        const auto circuits =
            kind == "frame" ? oracle::enumerate_frame_circuits(g) : oracle::enumerate_lift_circuits(g);
        std::cout << oracle::rank_from_circuits(circuits, parse_edge_selection(edges, g)) << "\n";
        return 0;
      };
    });
  }

  // Reports, sweep and fixtures.
  {
    auto* sub = app.add_subcommand("analyze", "full report");
    add_file(sub);
    static bool as_json = false;
    sub->add_flag("--json", as_json);
    sub->callback([&] {
      action = [&] {
        const auto r = analyze(load());
        const auto j = to_json(r);
        if (as_json) {
          std::cout << j.dump(2) << "\n";
          return 0;
        }
        for (const auto& [key, value] : j.items()) std::cout << key << ": " << value.dump() << "\n";
        return 0;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("check", "cross-validate the library against the oracle");
    static int max_n = 4, max_m = 5;
    static std::optional<std::uint64_t> seed;
    static unsigned threads = 0;
    static std::vector<int> criteria;
    static std::vector<std::string> ids;
    static bool quiet = false;
    sub->add_option("--max-n", max_n)->capture_default_str();
    sub->add_option("--max-m", max_m)->capture_default_str();
    sub->add_option("--seed", seed, "also run random graphs from this seed");
    sub->add_option("--threads", threads, "0 uses every core")->capture_default_str();
    sub->add_option("--criterion", criteria, "restrict to acceptance criteria");
    sub->add_option("--property", ids, "restrict to property ids");
    sub->add_flag("--quiet", quiet, "print only the summary and any counterexample");
    sub->callback([&] { action = [&] { return run_check(max_n, max_m, seed, threads, criteria, ids, quiet); }; });
  }
  {
    auto* sub = app.add_subcommand("fixtures", "named fixture graphs");
    static std::string dir;
    sub->add_option("--emit", dir, "directory to write <name>.sg files into")->required();
    sub->callback([&] {
      action = [&] {
        std::filesystem::create_directories(dir);
        for (const auto& name : fixture_names()) {
          write_graph_file(std::filesystem::path(dir) / fixture_file_name(name), fixture(name));
          std::cout << fixture_file_name(name) << "\n";
        }
        return 0;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
