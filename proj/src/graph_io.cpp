#include "signcon/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace signcon {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool to_int(std::string_view s, int& out) {
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc{} && ptr == end && out >= 0;
}

}  // namespace

SignedGraph parse_graph(std::string_view text) {
  int n = -1;
  std::vector<EdgeSpec> edges;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (n < 0) {
      constexpr std::string_view prefix = "signed-graph n=";
      if (line.substr(0, prefix.size()) != prefix || !to_int(line.substr(prefix.size()), n)) {
        throw ParseError(ParseError::Kind::Syntax, line_no, "expected 'signed-graph n=<int>'");
      }
      continue;
    }
    const auto t = tokens(line);
    int u = 0, v = 0;
    if (t.size() != 3 || !to_int(t[0], u) || !to_int(t[1], v) || (t[2] != "+" && t[2] != "-")) {
      throw ParseError(ParseError::Kind::Syntax, line_no, "expected '<u> <v> <+|->'");
    }
    if (u >= n || v >= n) {
      throw ParseError(ParseError::Kind::VertexOutOfRange, line_no,
                       "vertex " + std::to_string(std::max(u, v)) + " out of range for n=" +
                           std::to_string(n));
    }
    edges.push_back({u, v, t[2] == "+" ? Sign::Positive : Sign::Negative});
  }
  if (n < 0) throw ParseError(ParseError::Kind::Syntax, line_no, "missing header");
  return SignedGraph(n, edges);
}

std::string emit_graph(const SignedGraph& g) {
  std::ostringstream out;
  out << "signed-graph n=" << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << to_char(e.sign) << '\n';
  return out.str();
}

SignedGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_graph(text.str());
}

void write_graph_file(const std::filesystem::path& path, const SignedGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << emit_graph(g);
}

namespace {

constexpr Sign P = Sign::Positive;
constexpr Sign N = Sign::Negative;

const std::map<std::string, SignedGraph, std::less<>>& fixtures() {
  static const std::map<std::string, SignedGraph, std::less<>> table = {
      {"P2", SignedGraph(2, {{0, 1, P}})},
      {"N2", SignedGraph(2, {{0, 1, N}})},
      {"T+", SignedGraph(3, {{0, 1, P}, {1, 2, P}, {2, 0, P}})},
      {"T-", SignedGraph(3, {{0, 1, P}, {1, 2, P}, {2, 0, N}})},
      {"NEGLOOP", SignedGraph(1, {{0, 0, N}})},
      {"NECK2", SignedGraph(2, {{0, 1, P}, {0, 1, N}})},
      {"TIGHT", SignedGraph(5, {{0, 1, P}, {1, 2, P}, {2, 0, N}, {0, 3, P}, {3, 4, P}, {4, 0, N}})},
      {"LOOSE",
       SignedGraph(6, {{0, 1, P}, {1, 2, P}, {2, 0, N}, {3, 4, P}, {4, 5, P}, {5, 3, N}, {0, 3, P}})},
      {"THETA", SignedGraph(4, {{0, 1, P}, {0, 2, P}, {2, 1, P}, {0, 3, P}, {3, 1, N}})},
      {"UK4", SignedGraph(4, {{0, 1, N}, {0, 2, P}, {0, 3, P}, {1, 2, P}, {1, 3, P}, {2, 3, P}})},
      {"DISJB", SignedGraph(6, {{0, 1, P}, {1, 2, P}, {2, 0, N}, {3, 4, P}, {4, 5, P}, {5, 3, N},
                                {0, 3, P}, {1, 4, P}})},
      {"C4", SignedGraph(4, {{0, 1, P}, {1, 2, P}, {2, 3, P}, {3, 0, P}})},
      {"C5", SignedGraph(5, {{0, 1, P}, {1, 2, P}, {2, 3, P}, {3, 4, P}, {4, 0, P}})},
      {"K1", SignedGraph(1, {})},
      {"K4", SignedGraph(4, {{0, 1, P}, {0, 2, P}, {0, 3, P}, {1, 2, P}, {1, 3, P}, {2, 3, P}})},
      {"T+P", SignedGraph(4, {{0, 1, P}, {1, 2, P}, {2, 0, P}, {0, 3, P}})},
      {"T-P", SignedGraph(4, {{0, 1, P}, {1, 2, P}, {2, 0, N}, {3, 0, P}})},
      {"NEGLOOP+P", SignedGraph(2, {{0, 0, N}, {0, 1, P}})},
  };
  return table;
}

}  // namespace

SignedGraph fixture(std::string_view name) {
  const auto& table = fixtures();
  const auto it = table.find(name);
  if (it == table.end()) throw Error("unknown fixture '" + std::string(name) + "'");
  return it->second;
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"P2",  "N2",   "T+", "T-", "NEGLOOP", "NECK2", "TIGHT",
                                                 "LOOSE", "THETA", "UK4", "DISJB", "C4", "C5", "K1",
                                                 "K4",  "T+P",  "T-P", "NEGLOOP+P"};
  return names;
}

std::string fixture_file_name(std::string_view name) { return std::string(name) + ".sg"; }

}  // namespace signcon
