#include "signcon/report.hpp"

#include <algorithm>

#include "signcon/errors.hpp"
#include "signcon/matroid.hpp"
#include "signcon/sign_connectivity.hpp"
#include "signcon/structure.hpp"

namespace signcon {
namespace {

using json = nlohmann::ordered_json;

template <typename T>
std::vector<T> mapped(const std::vector<T>& ids, const std::vector<T>& map) {
  std::vector<T> out;
  for (T id : ids) out.push_back(map[id]);
  std::sort(out.begin(), out.end());
  return out;
}

/// Sign isthmi and sign articulation vertices of each sign component with
/// more than one vertex, in original ids.
void per_sign_component(const SignedGraph& g, Report& r) {
  for (const auto& cls : sign_components(g).classes) {
    if (cls.size() < 2) continue;
    const auto part = induced_subgraph(g, cls);
    r.isthmi.push_back({"sign_isthmus", cls, mapped(sign_isthmi(part.graph), part.edge_map)});
    r.articulation.push_back(
        {"sign_articulation", cls, mapped(sign_articulation_vertices(part.graph), part.vertex_map)});
  }
}

json partition_json(const ComponentPartition& p) {
  return json{{"kind", to_string(p.kind)}, {"classes", p.classes}, {"isolated", p.isolated}};
}

ComponentPartition partition_from(const json& j) {
  const auto kind = partition_kind_from_string(j.at("kind").get<std::string>());
  if (!kind) throw json::other_error::create(501, "unknown partition kind", &j);
  return {*kind, j.at("classes").get<std::vector<std::vector<int>>>(),
          j.at("isolated").get<std::vector<VertexId>>()};
}

json tagged_json(const TaggedIds& t) {
  json j{{"kind", t.kind}};
  if (!t.component.empty()) j["component"] = t.component;
  j["ids"] = t.ids;
  return j;
}

TaggedIds tagged_from(const json& j) {
  TaggedIds t;
  t.kind = j.at("kind").get<std::string>();
  if (j.contains("component")) t.component = j.at("component").get<std::vector<VertexId>>();
  t.ids = j.at("ids").get<std::vector<int>>();
  return t;
}

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

Report analyze(const SignedGraph& g) {
  Report r;
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  r.harary_bipartition = harary_bipartition(g);
  r.balanced = r.harary_bipartition.has_value();
  r.components = {graph_components(g),    sign_components(g), positive_components(g),
                  negative_components(g), frame_components(g), lift_components(g)};
  r.isthmi.push_back({"isthmus", {}, isthmi(g)});
  r.isthmi.push_back({"balancing_edge", {}, balancing_edges(g)});
  r.isthmi.push_back({"frame_coloop", {}, frame_isthmi(g)});
  r.isthmi.push_back({"lift_coloop", {}, lift_isthmi(g)});
  r.articulation.push_back({"articulation", {}, articulation_vertices(g)});
  per_sign_component(g, r);
  r.balancing_vertices = balancing_vertices(g);
  try {
    r.quasibalanced = is_quasibalanced(g);
  } catch (const CycleBudgetExceeded&) {
    r.quasibalanced.reset();
  }
  r.contrabalanced = is_contrabalanced(g);
  r.cactus = is_cactus_forest(g);
  r.sign_connected = is_sign_connected(g);
  r.parity_connected = is_parity_connected(g);
  r.frame_connected = is_frame_connected(g);
  r.lift_connected = is_lift_connected(g);
  return r;
}

nlohmann::ordered_json to_json(const Report& r) {
  json j;
  j["vertices"] = r.vertices;
  j["edges"] = r.edges;
  j["balanced"] = r.balanced;
  if (r.harary_bipartition) {
    json parts = json::array();
    for (const auto& p : r.harary_bipartition->parts)
      parts.push_back({{"component", p.component}, {"switched", p.switched}});
    j["harary_bipartition"] = parts;
  } else {
    j["harary_bipartition"] = nullptr;
  }
  j["components"] = json::array();
  for (const auto& p : r.components) j["components"].push_back(partition_json(p));
  j["isthmi"] = json::array();
  for (const auto& t : r.isthmi) j["isthmi"].push_back(tagged_json(t));
  j["articulation"] = json::array();
  for (const auto& t : r.articulation) j["articulation"].push_back(tagged_json(t));
  j["balancing_vertices"] = r.balancing_vertices;
  j["quasibalanced"] = optional_json(r.quasibalanced);
  j["contrabalanced"] = r.contrabalanced;
  j["cactus"] = r.cactus;
  j["connection"] = {{"sign", r.sign_connected},
                     {"parity", r.parity_connected},
                     {"frame", r.frame_connected},
                     {"lift", r.lift_connected}};
  return j;
}

Report report_from_json(const nlohmann::ordered_json& j) {
  Report r;
  r.vertices = j.at("vertices").get<int>();
  r.edges = j.at("edges").get<int>();
  r.balanced = j.at("balanced").get<bool>();
  if (!j.at("harary_bipartition").is_null()) {
    HararyBipartition h;
    for (const auto& p : j.at("harary_bipartition"))
      h.parts.push_back({p.at("component").get<std::vector<VertexId>>(),
                         p.at("switched").get<std::vector<VertexId>>()});
    r.harary_bipartition = std::move(h);
  }
  for (const auto& p : j.at("components")) r.components.push_back(partition_from(p));
  for (const auto& t : j.at("isthmi")) r.isthmi.push_back(tagged_from(t));
  for (const auto& t : j.at("articulation")) r.articulation.push_back(tagged_from(t));
  r.balancing_vertices = j.at("balancing_vertices").get<std::vector<VertexId>>();
  if (!j.at("quasibalanced").is_null()) r.quasibalanced = j.at("quasibalanced").get<bool>();
  r.contrabalanced = j.at("contrabalanced").get<bool>();
  r.cactus = j.at("cactus").get<bool>();
  const auto& c = j.at("connection");
  r.sign_connected = c.at("sign").get<bool>();
  r.parity_connected = c.at("parity").get<bool>();
  r.frame_connected = c.at("frame").get<bool>();
  r.lift_connected = c.at("lift").get<bool>();
  return r;
}

}  // namespace signcon
