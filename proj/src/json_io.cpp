#include "chipfire/json_io.hpp"

#include <charconv>
#include <fstream>

namespace chipfire::io {
namespace {

std::int64_t as_integer(const json& value, const char* what) {
  if (!value.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return value.get<std::int64_t>();
}

}  // namespace

Digraph graph_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("graph document must be a JSON object");
  for (const char* key : {"vertices", "sink", "arcs"})
    if (!doc.contains(key)) throw InputError(std::string("graph document is missing \"") + key + "\"");

  const std::int64_t total = as_integer(doc["vertices"], "\"vertices\"");
  const std::int64_t sink = as_integer(doc["sink"], "\"sink\"");
  if (total < 2) throw GraphError(GraphErrorKind::no_vertices, "a graph needs a sink and at least one other vertex");
  if (sink < 1 || sink > total) throw InputError("sink id " + std::to_string(sink) + " is out of range");
  if (!doc["arcs"].is_array()) throw InputError("\"arcs\" must be an array");

  const auto n = static_cast<std::size_t>(total - 1);
  // file id (1-based) -> internal index, and back
  auto to_internal = [&](std::int64_t id) -> Vertex {
    if (id < 1 || id > total) throw InputError("vertex id " + std::to_string(id) + " is out of range");
    if (id == sink) return n;
    return static_cast<Vertex>(id < sink ? id - 1 : id - 2);
  };
  auto to_file = [&](Vertex v) -> std::int64_t {
    if (v == n) return sink;
    auto id = static_cast<std::int64_t>(v) + 1;
    return id < sink ? id : id + 1;
  };

  std::vector<Arc> arcs;
  for (const auto& entry : doc["arcs"]) {
    if (!entry.is_array() || entry.size() != 3) throw InputError("each arc must be [from, to, multiplicity]");
    arcs.push_back({to_internal(as_integer(entry[0], "arc source")), to_internal(as_integer(entry[1], "arc target")),
                    as_integer(entry[2], "arc multiplicity")});
  }
  try {
    return Digraph::build(n, arcs);
  } catch (const GraphError& e) {
    if (!e.vertex()) throw;
    const std::string id = std::to_string(to_file(*e.vertex()));
    switch (e.kind()) {
      case GraphErrorKind::loop_arc: throw GraphError(e.kind(), "loop arc at vertex " + id, e.vertex());
      case GraphErrorKind::sink_unreachable:
        throw GraphError(e.kind(), "vertex " + id + " has no directed path to the sink", e.vertex());
      case GraphErrorKind::arc_from_sink: throw GraphError(e.kind(), "the sink (vertex " + id + ") emits an arc", e.vertex());
      default: throw;
    }
  }
}

Digraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw InputError("graph file " + path + " is not valid JSON: " + e.what());
  }
  return graph_from_json(doc);
}

json graph_to_json(const Digraph& g) {
  json arcs = json::array();
  for (const Arc& arc : g.arcs()) arcs.push_back({arc.from + 1, arc.to + 1, arc.multiplicity});
  return {{"vertices", g.size() + 1}, {"sink", g.size() + 1}, {"arcs", arcs}};
}

Configuration parse_configuration(std::string_view text) {
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    std::int64_t value = 0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size())
      throw InputError("malformed configuration \"" + std::string(text) + "\"");
    values.push_back(value);
    pos = comma + 1;
  }
  return Configuration(std::move(values));
}

json to_json(const Rational& q) { return to_string(q); }

json to_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

json to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    out.push_back(std::vector<std::int64_t>(row.begin(), row.end()));
  }
  return out;
}

json to_json(const Verdict& v) {
  return {{"result", v.result},
          {"witness", v.witness ? to_json(*v.witness) : json(nullptr)},
          {"script", v.script ? to_json(*v.script) : json(nullptr)}};
}

json to_json(const ClassReport& r) {
  json members = json::array();
  for (const auto& m : r.stable_members) members.push_back(to_json(m));
  return {{"representative", to_json(r.representative)},
          {"critical", to_json(r.critical)},
          {"superstable", to_json(r.superstable)},
          {"stable_members", members},
          {"weights", r.weights},
          {"is_total_order", r.is_total_order},
          {"incomparable",
           r.incomparable ? json::array({to_json(r.incomparable->first), to_json(r.incomparable->second)})
                          : json(nullptr)}};
}

json to_json(const DualityReport& r) {
  json pairs = json::array();
  for (const auto& [critical, dual] : r.pairs) pairs.push_back({to_json(critical), to_json(dual)});
  json criticals = json::array(), superstables = json::array();
  for (const auto& c : r.criticals) criticals.push_back(to_json(c));
  for (const auto& s : r.superstables) superstables.push_back(to_json(s));
  return {{"criticals", criticals},
          {"superstables", superstables},
          {"pairs", pairs},
          {"bijection", r.bijection},
          {"violations", r.violations}};
}

json to_json(const Game& game, const ConjectureReport& r) {
  auto chain_json = [&](const std::vector<Configuration>& chain) {
    json out = json::array();
    for (const auto& c : chain)
      out.push_back({{"config", to_json(c)}, {"energy", to_json(energy_vector(game, c).value)}});
    return out;
  };
  json classes = json::array();
  json counterexamples = json::array();
  for (const auto& c : r.classes) {
    json entry = {{"critical", to_json(c.critical)},
                  {"superstable", to_json(c.superstable)},
                  {"members", c.member_count},
                  {"is_total_order", c.is_total_order},
                  {"sorted_chain", chain_json(c.sorted_chain)},
                  {"recurrence_chain", chain_json(c.recurrence_chain)},
                  {"recurrence_covers_class", c.recurrence_covers_class},
                  {"incomparable", json(nullptr)}};
    if (c.incomparable) {
      entry["incomparable"] = chain_json({c.incomparable->first, c.incomparable->second});
      counterexamples.push_back({{"graph", graph_to_json(game.graph())},
                                 {"class_critical", to_json(c.critical)},
                                 {"incomparable", entry["incomparable"]}});
    }
    classes.push_back(std::move(entry));
  }
  return {{"classes", classes},
          {"class_count", r.classes.size()},
          {"all_total", r.all_total},
          {"all_recurrence_chains_cover", r.all_chains_cover},
          {"counterexamples", counterexamples}};
}

json to_json(const Digraph& g, const oracle::CrossCheckReport& r) {
  json disagreements = json::array();
  for (const auto& d : r.disagreements)
    disagreements.push_back({{"graph", graph_to_json(g)},
                             {"configuration", to_json(d.configuration)},
                             {"fixpoint", d.fixpoint},
                             {"bounded", d.bounded},
                             {"energy_max", d.energy_max},
                             {"dual_superstable", d.dual_superstable},
                             {"error", d.error.empty() ? json(nullptr) : json(d.error)}});
  return {{"agree", r.agree()},
          {"configurations_checked", r.configurations_checked},
          {"sigma_min", to_json(r.sigma_min)},
          {"oracle_sigma_min", to_json(r.oracle_sigma_min)},
          {"determinant", r.determinant.str()},
          {"class_count", r.class_count},
          {"disagreements", disagreements}};
}

json to_json(const oracle::FuzzReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    json entry = {{"seed", f.seed}, {"graph", graph_to_json(f.graph)}, {"error", f.error.empty() ? json(nullptr) : json(f.error)}};
    entry["report"] = f.report ? to_json(f.graph, *f.report) : json(nullptr);
    failures.push_back(std::move(entry));
  }
  return {{"graphs_checked", r.graphs_checked},
          {"graphs_skipped", r.graphs_skipped},
          {"configurations_checked", r.configurations_checked},
          {"failures", failures},
          {"ok", r.failures.empty()}};
}

json to_json(const SourceComponentSet& components) {
  json out = json::array();
  for (const auto& c : components) {
    json ids = json::array();
    for (Vertex v : c) ids.push_back(v + 1);
    out.push_back(ids);
  }
  return out;
}

}  // namespace chipfire::io
