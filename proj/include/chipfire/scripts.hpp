#pragma once

#include <vector>

#include "chipfire/digraph.hpp"
#include "chipfire/dynamics.hpp"
#include "chipfire/vector.hpp"

namespace chipfire {

/// σΔ ⪰ 0 and σΔ ≠ 0. Throws NegativeScript if σ has a negative entry.
bool is_g_positive(const Digraph& g, const Script& s);

/// G-positive, and supp(σΔ) meets every source component.
bool is_g_strongly_positive(const Digraph& g, const Script& s);
bool is_g_strongly_positive(const Digraph& g, const Script& s, const SourceComponentSet& sources);

struct GreedyTrace {
  Script script;
  /// Vertex incremented at each step, in order.
  std::vector<Vertex> increments;
};

/// Greedy script algorithm: start from the all-ones script and, while some
/// entry of σΔ is negative, increment σ at one such index (picked by `choose`,
/// lowest index by default). The result is post-checked for strong positivity.
GreedyTrace minimum_strong_script_trace(const Digraph& g, const VertexChooser& choose = {});

/// σᴹ, the minimum G-strongly positive script.
Script minimum_strong_script(const Digraph& g);

/// 𝟙·adj(Δ) = det(Δ)·𝟙·Δ⁻¹; its image under Δ is det(Δ) on every vertex.
Script strong_script_from_inverse(const Digraph& g);

}  // namespace chipfire
