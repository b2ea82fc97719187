#pragma once

#include <string>

#include "chipfire/json_io.hpp"

namespace fixtures {

using chipfire::Configuration;
using chipfire::Script;

inline std::string data_path(const std::string& name) { return std::string(CHIPFIRE_DATA_DIR) + "/" + name; }

// v1 → sink ×2
inline chipfire::Digraph g1() { return chipfire::io::load_graph(data_path("g1.json")); }

// The five-vertex worked example, sink 5.
inline chipfire::Digraph g2() { return chipfire::io::load_graph(data_path("g2.json")); }

// v1 ⇄ v2 with multiplicities 2 and 5, v2 → sink ×1.
inline chipfire::Digraph g3() { return chipfire::io::load_graph(data_path("g3.json")); }

inline chipfire::Digraph from_json(const char* text) {
  return chipfire::io::graph_from_json(chipfire::io::json::parse(text));
}

}  // namespace fixtures
