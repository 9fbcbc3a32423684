#include "lham/io.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <set>

#include "lham/error.hpp"

namespace lham {

using nlohmann::json;

json graph_to_json(const Graph& g) {
  return json{{"n", g.n()}, {"degree_bound", g.degree_bound()}, {"adjacency", g.adjacency()}};
}

Graph graph_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    const int bound = j.at("degree_bound").get<int>();
    auto adjacency = j.at("adjacency").get<std::vector<std::vector<Vertex>>>();
    return Graph::from_adjacency(n, bound, std::move(adjacency));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed graph JSON: ") + e.what());
  }
}

Graph read_graph_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  try {
    return graph_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw InputError("cannot parse '" + path + "': " + e.what());
  }
}

void write_graph_json_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << graph_to_json(g).dump() << '\n';
}

json codec_to_json(const Codec& codec) {
  json arcs = json::array();
  for (const Arc& a : codec.order().arcs()) arcs.push_back({a.tail, a.head});
  return json{{"arcs", arcs}, {"n_base", codec.n_base()}, {"d", codec.d()}};
}

Codec codec_from_json(const json& j) {
  try {
    std::vector<Arc> arcs;
    for (const auto& pair : j.at("arcs")) arcs.push_back({pair.at(0).get<int>(), pair.at(1).get<int>()});
    return Codec(j.at("n_base").get<int>(), j.at("d").get<int>(), EdgeOrder(std::move(arcs)));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed codec JSON: ") + e.what());
  }
}

namespace {

std::string collapsed_label(const Codec& codec, Vertex v) {
  const VertexName name = codec.name(v);
  if (const auto* g = std::get_if<GadgetSlot>(&name)) {
    return "\"P(" + std::to_string(g->arc.tail) + "," + std::to_string(g->arc.head) + ")\"";
  }
  return "\"b(" + std::to_string(std::get<HubSlot>(name).base) + ")\"";
}

}  // namespace

void write_dot(std::ostream& out, const Graph& g, const DotOptions& options, const Codec* codec) {
  out << "graph " << options.name << " {\n";
  if (options.collapse_gadgets) {
    if (codec == nullptr || codec->vertex_count() != g.n()) {
      throw InputError("collapsed DOT export needs the matching codec");
    }
    std::set<std::string> nodes;
    std::set<std::pair<std::string, std::string>> edges;
    for (Vertex v = 0; v < g.n(); ++v) nodes.insert(collapsed_label(*codec, v));
    for (const Edge& e : g.edges()) {
      auto a = collapsed_label(*codec, e.u);
      auto b = collapsed_label(*codec, e.v);
      if (a == b) continue;
      if (b < a) std::swap(a, b);
      edges.emplace(a, b);
    }
    for (const auto& node : nodes) out << "  " << node << ";\n";
    for (const auto& [a, b] : edges) out << "  " << a << " -- " << b << ";\n";
  } else {
    for (Vertex v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
    for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  }
  out << "}\n";
}

}  // namespace lham
