#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "chipfire/digraph.hpp"
#include "chipfire/oracle.hpp"
#include "chipfire/order.hpp"
#include "chipfire/recognition.hpp"

namespace chipfire::io {

using nlohmann::json;

/// Reads `{"vertices": n+1, "sink": id, "arcs": [[from, to, mult], ...]}` with
/// 1-based ids. The sink may carry any id; vertices are renumbered so that it
/// comes last and the others keep their relative order. Throws GraphError or
/// InputError; error messages use the file's vertex ids.
Digraph graph_from_json(const json& doc);
Digraph load_graph(const std::string& path);

/// Canonical form: the sink is vertex n+1.
json graph_to_json(const Digraph& g);

/// "1,0,0,1" -> (1,0,0,1). Throws InputError.
Configuration parse_configuration(std::string_view text);

template <typename Tag>
json to_json(const IntVector<Tag>& v) {
  return json(v.raw());
}

json to_json(const Rational& q);
json to_json(const RationalVector& v);
json to_json(const IntMatrix& m);
json to_json(const Verdict& v);
json to_json(const ClassReport& r);
json to_json(const DualityReport& r);
json to_json(const Game& game, const ConjectureReport& r);
json to_json(const Digraph& g, const oracle::CrossCheckReport& r);
json to_json(const oracle::FuzzReport& r);

/// 1-based vertex lists.
json to_json(const SourceComponentSet& components);

}  // namespace chipfire::io
