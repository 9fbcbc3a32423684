#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "lham/construction.hpp"
#include "lham/graph.hpp"

namespace lham {

/// {"n": int, "degree_bound": int, "adjacency": [[int,...],...]}; order significant.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

Graph read_graph_json_file(const std::string& path);
void write_graph_json_file(const Graph& g, const std::string& path);

/// Sidecar {"arcs": [[u,v],...] in f-order, "n_base": int, "d": int}.
nlohmann::json codec_to_json(const Codec& codec);
Codec codec_from_json(const nlohmann::json& j);

struct DotOptions {
  /// Requires a codec: one node per gadget and per hub, edges deduplicated.
  bool collapse_gadgets = false;
  std::string name = "G";
};

/// DOT export; neighbour order is not represented.
void write_dot(std::ostream& out, const Graph& g, const DotOptions& options = {}, const Codec* codec = nullptr);

}  // namespace lham
