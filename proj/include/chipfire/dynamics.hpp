#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "chipfire/digraph.hpp"
#include "chipfire/vector.hpp"

namespace chipfire {

struct StabilizationResult {
  Configuration stable;
  /// Firing script of the stabilization; stable = input − script·Δ.
  Script script;

  friend bool operator==(const StabilizationResult&, const StabilizationResult&) = default;
};

/// Picks one vertex out of a non-empty candidate list.
using VertexChooser = std::function<Vertex(std::span<const Vertex> candidates)>;

/// σΔ: the net number of chips each vertex loses when `s` is fired.
Configuration laplacian_product(const Digraph& g, const Script& s);

/// No vertex holds at least its out-degree. Negative entries are allowed.
bool is_stable(const Digraph& g, const Configuration& a);

/// Unconstrained firing: a − s·Δ. `s` may have negative entries (reverse firing).
Configuration apply_script(const Digraph& g, const Configuration& a, const Script& s);

Configuration fire_one(const Digraph& g, const Configuration& a, Vertex v);

bool is_legal_sequence(const Digraph& g, const Configuration& a, std::span<const Vertex> sequence);

/// Stabilizes a non-negative configuration by repeatedly firing the
/// lowest-index active vertex, as many times at once as its chips allow.
/// Throws NegativeInput.
StabilizationResult stabilize(const Digraph& g, const Configuration& a);

/// Stabilizes with one firing per step, the fired vertex picked by `choose`
/// among the currently active ones. Throws NegativeInput.
StabilizationResult stabilize(const Digraph& g, const Configuration& a, const VertexChooser& choose);

/// Stabilizes any configuration, negative entries included, giving up after
/// `max_firings` firings. nullopt means the budget ran out.
std::optional<StabilizationResult> stabilize_bounded(const Digraph& g, const Configuration& a,
                                                     std::uint64_t max_firings);

/// (d⁺₁−1, …, d⁺ₙ−1), the largest stable configuration.
Configuration c_max(const Digraph& g);

}  // namespace chipfire
