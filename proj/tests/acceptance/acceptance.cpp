// Acceptance runner: one PASS/FAIL line per criterion.
//
//   signcon_acceptance [--criterion N] --cli <signcon binary> --golden <dir>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <unistd.h>

#include "signcon/graph_io.hpp"
#include "signcon/verify.hpp"

namespace fs = std::filesystem;
using namespace signcon;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

const std::array<const char*, 11> kTitles = {
    "",
    "sign connection criterion and sign components",
    "five balancing-edge conditions agree",
    "sign isthmi are isthmi and balancing edges",
    "matroid rank, coloops and components against circuits",
    "frame and lift connection against sign connection",
    "contrabalance suite",
    "parity connection",
    "positive and negative components",
    "quasibalance suite",
    "fixture regression through the command line",
};

Verdict sweep_criterion(int criterion) {
  verify::SweepOptions opt;
  opt.criteria = {criterion};
  const auto report = verify::run_sweep(opt);
  std::size_t holds = 0, checks = 0;
  for (const auto& r : report.results) {
    holds += r.holds;
    ++checks;
  }
  std::ostringstream out;
  out << checks << " properties over " << report.exhaustive_graphs << " graphs, " << holds
      << " applicable checks hold";
  const auto* failure = report.first_failure();
  if (!failure) return {true, out.str()};
  out << "; violated:";
  for (const auto& r : report.results)
    if (r.violated) out << " " << r.property->id << " (" << r.violated << " graphs)";
  const auto& c = *failure->first;
  out << "; first " << failure->property->id << " violated on " << failure->violated << " graphs, first #" << c.index
      << " (" << c.detail << "):\n" << emit_graph(c.graph);
  return {false, out.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Runs the CLI in `dir`, returning stdout followed by "(exit N)".
std::string run_cli(const std::string& cli, const fs::path& dir, const std::string& args) {
  const std::string cmd =
      "cd '" + dir.string() + "' && '" + cli + "' " + args + " 2>/dev/null; echo \"(exit $?)\"";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "popen failed";
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

struct Case {
  std::string title;
  std::string args;
  std::string expected;  // stdout lines then "(exit N)\n"
};

std::vector<Case> read_cases(const fs::path& file) {
  std::vector<Case> cases;
  std::istringstream in(slurp(file));
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("== ", 0) == 0) {
      cases.push_back({line.substr(3), {}, {}});
    } else if (line.rfind("$ ", 0) == 0 && !cases.empty()) {
      cases.back().args = line.substr(2);
    } else if (line.rfind(">", 0) == 0 && !cases.empty()) {
      cases.back().expected += (line.size() > 2 ? line.substr(2) : std::string()) + "\n";
    } else if (line.rfind("(exit", 0) == 0 && !cases.empty()) {
      cases.back().expected += line + "\n";
    }
  }
  return cases;
}

Verdict fixture_regression(const std::string& cli, const fs::path& golden) {
  const fs::path dir = fs::temp_directory_path() / ("signcon-acceptance-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::ostringstream fails;
  int failed = 0;
  run_cli(cli, dir, "fixtures --emit .");
  int fixtures = 0;
  for (const auto& entry : fs::directory_iterator(golden / "fixtures")) {
    ++fixtures;
    const auto name = entry.path().filename();
    const std::string text = slurp(dir / name);
    if (text != slurp(entry.path())) {
      ++failed;
      fails << "\n  fixture " << name.string() << " differs from golden file";
    } else if (emit_graph(parse_graph(text)) != text) {
      ++failed;
      fails << "\n  fixture " << name.string() << " does not round trip";
    }
  }
  const auto cases = read_cases(golden / "cases.txt");
  for (const auto& c : cases) {
    const auto got = run_cli(cli, dir, c.args);
    if (got != c.expected && ++failed <= 10) {
      fails << "\n  " << c.title << ": `" << c.args << "` gave\n" << got;
    }
  }
  fs::remove_all(dir);
  std::ostringstream out;
  out << fixtures << " fixture files, " << cases.size() << " command cases, " << failed << " mismatches"
      << fails.str();
  return {failed == 0 && fixtures > 0 && !cases.empty(), out.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  std::string cli;
  std::string golden;
  app.add_option("--criterion", only, "run one criterion (1-10); 0 runs all");
  app.add_option("--cli", cli, "path of the signcon executable")->required();
  app.add_option("--golden", golden, "golden directory")->required();
  CLI11_PARSE(app, argc, argv);
  cli = fs::absolute(cli).string();

  bool all = true;
  for (int c = 1; c <= 10; ++c) {
    if (only != 0 && c != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    const Verdict v = c == 10 ? fixture_regression(cli, golden) : sweep_criterion(c);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << c << " (" << kTitles[c] << "): " << v.detail
              << " [" << secs << " s]\n";
    all = all && v.pass;
  }
  return all ? 0 : 1;
}
