#include "signcon/format.hpp"

#include <charconv>
#include <stdexcept>

#include "signcon/errors.hpp"

namespace signcon {

std::string join_ids(std::span<const int> ids) {
  std::string out;
  for (int id : ids) {
    if (!out.empty()) out += ' ';
    out += std::to_string(id);
  }
  return out;
}

std::string format_partition(const ComponentPartition& p) {
  std::string out;
  for (const auto& cls : p.classes) out += join_ids(cls) + "\n";
  if (p.edge_kind() && !p.isolated.empty()) out += "isolated: " + join_ids(p.isolated) + "\n";
  return out;
}

std::string format_circuit(const CircuitClassification& c) {
  const char* which = c.frame_circuit() && c.lift_circuit() ? "both"
                      : c.frame_circuit()                   ? "frame"
                      : c.lift_circuit()                    ? "lift"
                                                            : "neither";
  return std::string(to_string(c.type)) + " " + which;
}

std::vector<EdgeId> parse_edge_selection(std::string_view text, const SignedGraph& g) {
  std::vector<EdgeId> out;
  if (text == "none") return out;
  if (text == "all") {
    for (EdgeId e = 0; e < g.edge_count(); ++e) out.push_back(e);
    return out;
  }
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    EdgeId e = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), e);
    if (ec != std::errc() || end != item.data() + item.size() || item.empty())
      throw std::invalid_argument("bad edge id '" + std::string(item) + "'");
    g.check_edge(e);
    out.push_back(e);
    text = comma == std::string_view::npos ? std::string_view() : text.substr(comma + 1);
  }
  return out;
}

}  // namespace signcon
