#include "chipfire/scripts.hpp"

#include <limits>

#include "chipfire/linalg.hpp"

namespace chipfire {
namespace {

void require_non_negative(const Script& s) {
  if (!is_non_negative(s)) throw NegativeScript("script must be non-negative, got " + to_string(s));
}

bool positive_image(const Configuration& image) { return is_non_negative(image) && !is_zero(image); }

}  // namespace

bool is_g_positive(const Digraph& g, const Script& s) {
  require_non_negative(s);
  return positive_image(laplacian_product(g, s));
}

bool is_g_strongly_positive(const Digraph& g, const Script& s) {
  return is_g_strongly_positive(g, s, source_components(g));
}

bool is_g_strongly_positive(const Digraph& g, const Script& s, const SourceComponentSet& sources) {
  require_non_negative(s);
  const Configuration image = laplacian_product(g, s);
  if (!positive_image(image)) return false;
  for (const auto& component : sources) {
    bool hit = false;
    for (Vertex v : component) hit = hit || image[v] != 0;
    if (!hit) return false;
  }
  return true;
}

GreedyTrace minimum_strong_script_trace(const Digraph& g, const VertexChooser& choose) {
  const std::size_t n = g.size();
  // Every G-positive script dominating 𝟙 also dominates each greedy iterate,
  // so the iteration can never outgrow this one.
  const std::int64_t weight_bound = weight(strong_script_from_inverse(g));

  GreedyTrace trace{Script(n, 1), {}};
  Configuration image = laplacian_product(g, trace.script);
  for (;;) {
    std::vector<Vertex> negative;
    for (Vertex v = 0; v < n; ++v)
      if (image[v] < 0) negative.push_back(v);
    if (negative.empty()) break;

    const Vertex v = choose ? choose(negative) : negative.front();
    if (v >= n || image[v] >= 0) throw InvariantViolation("increment policy chose a non-negative index");
    ++trace.script[v];
    trace.increments.push_back(v);
    if (weight(trace.script) > weight_bound)
      throw InvariantViolation("greedy script outgrew the inverse-derived strongly positive script");

    // image += Δ_v
    image[v] = detail::checked_add(image[v], g.out_degree(v));
    for (const Arc& arc : g.out_arcs(v))
      if (arc.to != g.sink()) image[arc.to] = detail::checked_sub(image[arc.to], arc.multiplicity);
  }

  if (!is_g_strongly_positive(g, trace.script))
    throw StrongPositivityPostCheckFailed("greedy script " + to_string(trace.script) +
                                          " satisfies σΔ ⪰ 0 but is not G-strongly positive");
  return trace;
}

Script minimum_strong_script(const Digraph& g) { return minimum_strong_script_trace(g).script; }

Script strong_script_from_inverse(const Digraph& g) {
  const BigIntMatrix adj = adjugate(g.reduced_laplacian());
  Script s(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    BigInt column = 0;
    for (std::size_t i = 0; i < g.size(); ++i) column += adj(i, j);
    if (column > std::numeric_limits<std::int64_t>::max())
      throw OverflowError("inverse-derived script does not fit in 64 bits");
    s[j] = static_cast<std::int64_t>(column);
  }
  return s;
}

}  // namespace chipfire
