#include "chipfire/cli.hpp"

#include <algorithm>
#include <functional>

#include <CLI11.hpp>

#include "chipfire/json_io.hpp"
#include "chipfire/scripts.hpp"

namespace chipfire::cli {
namespace {

using io::json;
using io::to_json;

struct Options {
  std::string graph_path;
  std::string config_text;
  bool full = false;
  bool trace = false;
  std::uint64_t cap = kDefaultEnumerationCap;
  unsigned threads = 1;
  std::size_t fuzz_n = 4;
  std::int64_t fuzz_mult = 3;
  std::uint64_t fuzz_count = 200;
  std::uint64_t fuzz_seed = 1;
};

struct Outcome {
  json doc;
  int code = kOk;
};

Configuration config_for(const Game& game, const Options& opt) {
  Configuration a = io::parse_configuration(opt.config_text);
  if (a.size() != game.size())
    throw DimensionMismatch("configuration has " + std::to_string(a.size()) + " entries, graph has " +
                            std::to_string(game.size()) + " non-sink vertices");
  return a;
}

json incremented_vertices(const std::vector<Vertex>& increments) {
  json out = json::array();
  for (Vertex v : increments) out.push_back(v + 1);
  return out;
}

Outcome cmd_validate(const Options& opt) {
  const Digraph g = io::load_graph(opt.graph_path);
  return {{{"valid", true},
           {"n", g.size()},
           {"graph", io::graph_to_json(g)},
           {"source_components", to_json(source_components(g))},
           {"determinant", determinant(g.reduced_laplacian()).str()}}};
}

Outcome cmd_laplacian(const Options& opt) {
  const Digraph g = io::load_graph(opt.graph_path);
  return {{{"laplacian", to_json(opt.full ? full_laplacian(g) : reduced_laplacian(g))}}};
}

Outcome cmd_stabilize(const Options& opt) {
  const Digraph g = io::load_graph(opt.graph_path);
  Configuration a = io::parse_configuration(opt.config_text);
  auto r = stabilize(g, a);
  return {{{"stable", to_json(r.stable)}, {"script", to_json(r.script)}}};
}

Outcome cmd_sigma_min(const Options& opt) {
  const Digraph g = io::load_graph(opt.graph_path);
  auto trace = minimum_strong_script_trace(g);
  json doc = {{"sigma_min", to_json(trace.script)}};
  if (opt.trace) doc["increments"] = incremented_vertices(trace.increments);
  return {doc};
}

Verdict criticality(const Game& game, const Configuration& a, std::uint64_t cap) {
  Verdict fix = is_critical_fixpoint(game, a);
  Verdict box = is_critical_bounded(game, a, cap);
  if (fix.result != box.result)
    throw InvariantViolation("fixpoint and bounded criticality tests disagree on " + to_string(a));
  return {fix.result, box.witness, fix.script};
}

Outcome cmd_is_critical(const Options& opt) {
  const Game game(io::load_graph(opt.graph_path));
  return {to_json(criticality(game, config_for(game, opt), opt.cap))};
}

Outcome cmd_is_superstable(const Options& opt) {
  const Game game(io::load_graph(opt.graph_path));
  return {to_json(is_superstable(game, config_for(game, opt), opt.cap))};
}

Outcome cmd_dual(const Options& opt) {
  const Game game(io::load_graph(opt.graph_path));
  const Configuration a = config_for(game, opt);
  if (!is_non_negative(a)) throw NegativeInput("configuration must be non-negative, got " + to_string(a));
  if (!is_stable(game.graph(), a)) throw NotStable("configuration must be stable, got " + to_string(a));
  const Configuration dual = game.c_max() - a;
  return {{{"config", to_json(a)},
           {"dual", to_json(dual)},
           {"config_is_critical", to_json(criticality(game, a, opt.cap))},
           {"dual_is_superstable", to_json(is_superstable(game, dual, opt.cap))},
           {"dual_is_critical", to_json(criticality(game, dual, opt.cap))},
           {"config_is_superstable", to_json(is_superstable(game, a, opt.cap))}}};
}

Outcome cmd_classes(const Options& opt) {
  const Game game(io::load_graph(opt.graph_path));
  json classes = json::array();
  for (const auto& r : partition_classes(game, opt.cap, opt.threads)) classes.push_back(to_json(r));
  return {{{"determinant", game.determinant().str()}, {"class_count", classes.size()}, {"classes", classes}}};
}

Outcome cmd_energy(const Options& opt) {
  const Game game(io::load_graph(opt.graph_path));
  return {{{"energy", to_json(energy_vector(game, config_for(game, opt)).value)}}};
}

Outcome cmd_chain(const Options& opt) {
  const Game game(io::load_graph(opt.graph_path));
  json chain = json::array();
  for (const auto& c : linseq_chain(game, config_for(game, opt)))
    chain.push_back({{"config", to_json(c)}, {"energy", to_json(energy_vector(game, c).value)}});
  json last = chain.back()["config"];
  return {{{"chain", chain}, {"critical", last}}};
}

Outcome cmd_conjecture(const Options& opt) {
  const Game game(io::load_graph(opt.graph_path));
  return {to_json(game, conjecture_scan(game, opt.cap, opt.threads))};
}

Outcome cmd_cross_check(const Options& opt) {
  const Digraph g = io::load_graph(opt.graph_path);
  const auto report = oracle::cross_check(g, opt.cap);
  return {to_json(g, report), report.agree() ? kOk : kInvariantFailure};
}

Outcome cmd_fuzz(const Options& opt) {
  const auto report = oracle::fuzz_campaign(opt.fuzz_n, opt.fuzz_mult, opt.fuzz_count, opt.fuzz_seed, opt.cap,
                                            opt.threads);
  return {to_json(report), report.failures.empty() ? kOk : kInvariantFailure};
}

json error_doc(const char* kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Chip-firing games on digraphs with a global sink", "chipfire"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--cap", opt.cap, "Largest box any exhaustive enumeration may visit")->check(CLI::PositiveNumber);
  app.add_option("--parallel", opt.threads, "Worker threads for classes, conjecture and fuzz")
      ->check(CLI::Range(1u, 1024u));

  std::function<Outcome(const Options&)> handler;
  auto graph_command = [&](const char* name, const char* help, Outcome (*fn)(const Options&), bool needs_config) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("graph", opt.graph_path, "Graph JSON file")->required();
    if (needs_config) sub->add_option("-c,--config", opt.config_text, "Configuration, e.g. 1,0,0,1")->required();
    sub->callback([&handler, fn] { handler = fn; });
    return sub;
  };

  graph_command("validate", "Validate a graph file", cmd_validate, false);
  graph_command("laplacian", "Print the reduced Laplacian", cmd_laplacian, false)
      ->add_flag("--full", opt.full, "Include the sink row and column");
  graph_command("stabilize", "Stabilize a configuration", cmd_stabilize, true);
  graph_command("sigma-min", "Minimum G-strongly positive script", cmd_sigma_min, false)
      ->add_flag("--trace", opt.trace, "Also list the greedy increments");
  graph_command("is-critical", "Decide criticality", cmd_is_critical, true);
  graph_command("is-superstable", "Decide superstability", cmd_is_superstable, true);
  graph_command("dual", "c_max - a and its verdicts", cmd_dual, true);
  graph_command("classes", "Partition stable configurations into equivalence classes", cmd_classes, false);
  graph_command("energy", "Energy vector a·Δ⁻¹", cmd_energy, true);
  graph_command("chain", "Iterate x -> (x + σᴹΔ)° to the critical fixpoint", cmd_chain, true);
  graph_command("conjecture", "Check whether the energy order is total on each class", cmd_conjecture, false);
  graph_command("cross-check", "Compare every criticality test against the oracles", cmd_cross_check, false);

  CLI::App* fuzz = app.add_subcommand("fuzz", "Cross-check random digraphs");
  fuzz->add_option("--n", opt.fuzz_n, "Largest number of non-sink vertices")->check(CLI::Range(1, 16));
  fuzz->add_option("--mult", opt.fuzz_mult, "Largest arc multiplicity")->check(CLI::Range(1, 1000));
  fuzz->add_option("--seeds", opt.fuzz_count, "Number of graphs");
  fuzz->add_option("--seed", opt.fuzz_seed, "First seed");
  fuzz->callback([&handler] { handler = cmd_fuzz; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "chipfire: " << e.what() << "\n";
    out << error_doc("UsageError", e.what()).dump() << "\n";
    return kMalformedInput;
  }

  auto fail = [&](int code, const char* kind, const std::string& message) {
    err << "chipfire: " << message << "\n";
    out << error_doc(kind, message).dump() << "\n";
    return code;
  };
  try {
    Outcome outcome = handler(opt);
    out << outcome.doc.dump() << "\n";
    return outcome.code;
  } catch (const GraphError& e) {
    return fail(kMalformedInput, to_string(e.kind()), e.what());
  } catch (const NegativeInput& e) {
    return fail(kMalformedInput, "NegativeInput", e.what());
  } catch (const NotStable& e) {
    return fail(kMalformedInput, "NotStable", e.what());
  } catch (const NegativeScript& e) {
    return fail(kMalformedInput, "NegativeScript", e.what());
  } catch (const InputError& e) {
    return fail(kMalformedInput, "InputError", e.what());
  } catch (const SingularMatrix& e) {
    return fail(kMalformedInput, "Singular", e.what());
  } catch (const OverflowError& e) {
    return fail(kMalformedInput, "Overflow", e.what());
  } catch (const EnumerationCapExceeded& e) {
    return fail(kCapExceeded, "EnumerationCapExceeded", e.what());
  } catch (const SearchBoundExceeded& e) {
    return fail(kCapExceeded, "SearchBoundExceeded", e.what());
  } catch (const InvariantViolation& e) {
    return fail(kInvariantFailure, "InvariantViolation", e.what());
  }
}

}  // namespace chipfire::cli
