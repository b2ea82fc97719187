#include "chipfire/dynamics.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace chipfire {
namespace {

void require_size(const Digraph& g, std::size_t size, const char* what) {
  if (size != g.size())
    throw DimensionMismatch(std::string(what) + " has length " + std::to_string(size) + ", graph has " +
                            std::to_string(g.size()) + " non-sink vertices");
}

// a -= times · Δ_v
void fire_in_place(const Digraph& g, Configuration& a, Vertex v, std::int64_t times) {
  a[v] = detail::checked_sub(a[v], detail::checked_mul(times, g.out_degree(v)));
  for (const Arc& arc : g.out_arcs(v))
    if (arc.to != g.sink()) a[arc.to] = detail::checked_add(a[arc.to], detail::checked_mul(times, arc.multiplicity));
}

std::vector<Vertex> active_vertices(const Digraph& g, const Configuration& a) {
  std::vector<Vertex> active;
  for (Vertex v = 0; v < g.size(); ++v)
    if (a[v] >= g.out_degree(v)) active.push_back(v);
  return active;
}

}  // namespace

Configuration laplacian_product(const Digraph& g, const Script& s) {
  require_size(g, s.size(), "script");
  Configuration loss(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    if (s[v] == 0) continue;
    loss[v] = detail::checked_add(loss[v], detail::checked_mul(s[v], g.out_degree(v)));
    for (const Arc& arc : g.out_arcs(v))
      if (arc.to != g.sink())
        loss[arc.to] = detail::checked_sub(loss[arc.to], detail::checked_mul(s[v], arc.multiplicity));
  }
  return loss;
}

bool is_stable(const Digraph& g, const Configuration& a) {
  require_size(g, a.size(), "configuration");
  for (Vertex v = 0; v < g.size(); ++v)
    if (a[v] >= g.out_degree(v)) return false;
  return true;
}

Configuration apply_script(const Digraph& g, const Configuration& a, const Script& s) {
  require_size(g, a.size(), "configuration");
  return a - laplacian_product(g, s);
}

Configuration fire_one(const Digraph& g, const Configuration& a, Vertex v) {
  require_size(g, a.size(), "configuration");
  if (v >= g.size()) throw DimensionMismatch("only non-sink vertices can fire");
  Configuration b = a;
  fire_in_place(g, b, v, 1);
  return b;
}

bool is_legal_sequence(const Digraph& g, const Configuration& a, std::span<const Vertex> sequence) {
  require_size(g, a.size(), "configuration");
  Configuration current = a;
  for (Vertex v : sequence) {
    if (v >= g.size()) throw DimensionMismatch("only non-sink vertices can fire");
    if (current[v] < g.out_degree(v)) return false;
    fire_in_place(g, current, v, 1);
  }
  return true;
}

StabilizationResult stabilize(const Digraph& g, const Configuration& a) {
  require_size(g, a.size(), "configuration");
  if (!is_non_negative(a)) throw NegativeInput("stabilize requires a non-negative configuration, got " + to_string(a));

  StabilizationResult r{a, Script(g.size())};
  const std::size_t n = g.size();
  Vertex v = 0;
  while (v < n) {
    const std::int64_t d = g.out_degree(v);
    if (r.stable[v] < d) {
      ++v;
      continue;
    }
    const std::int64_t times = r.stable[v] / d;
    fire_in_place(g, r.stable, v, times);
    r.script[v] = detail::checked_add(r.script[v], times);
    // Firing v only adds chips to its out-neighbours; restart from the lowest one touched.
    Vertex lowest = v + 1;
    for (const Arc& arc : g.out_arcs(v))
      if (arc.to != g.sink()) lowest = std::min(lowest, arc.to);
    v = std::min(v, lowest);
  }
  return r;
}

StabilizationResult stabilize(const Digraph& g, const Configuration& a, const VertexChooser& choose) {
  require_size(g, a.size(), "configuration");
  if (!is_non_negative(a)) throw NegativeInput("stabilize requires a non-negative configuration, got " + to_string(a));

  StabilizationResult r{a, Script(g.size())};
  for (auto active = active_vertices(g, r.stable); !active.empty(); active = active_vertices(g, r.stable)) {
    const Vertex v = choose(active);
    if (std::find(active.begin(), active.end(), v) == active.end())
      throw InvariantViolation("firing policy chose an inactive vertex");
    fire_in_place(g, r.stable, v, 1);
    r.script[v] = detail::checked_add(r.script[v], 1);
  }
  return r;
}

std::optional<StabilizationResult> stabilize_bounded(const Digraph& g, const Configuration& a,
                                                     std::uint64_t max_firings) {
  require_size(g, a.size(), "configuration");
  StabilizationResult r{a, Script(g.size())};
  std::uint64_t fired = 0;
  for (;;) {
    Vertex v = 0;
    while (v < g.size() && r.stable[v] < g.out_degree(v)) ++v;
    if (v == g.size()) return r;
    if (fired == max_firings) return std::nullopt;
    fire_in_place(g, r.stable, v, 1);
    r.script[v] = detail::checked_add(r.script[v], 1);
    ++fired;
  }
}

Configuration c_max(const Digraph& g) {
  Configuration c(g.size());
  for (Vertex v = 0; v < g.size(); ++v) c[v] = g.out_degree(v) - 1;
  return c;
}

}  // namespace chipfire
