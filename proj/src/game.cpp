#include "chipfire/game.hpp"

#include <string>
#include <utility>

#include "chipfire/scripts.hpp"

namespace chipfire {

Game::Game(Digraph graph)
    : graph_(std::move(graph)),
      sigma_min_(minimum_strong_script(graph_)),
      sigma_min_image_(laplacian_product(graph_, sigma_min_)),
      c_max_(chipfire::c_max(graph_)),
      sources_(source_components(graph_)),
      det_(chipfire::determinant(graph_.reduced_laplacian())),
      adj_(chipfire::adjugate(graph_.reduced_laplacian())) {
  if (det_ <= 0) throw InvariantViolation("reduced Laplacian has non-positive determinant " + det_.str());
}

std::uint64_t stable_count(const Digraph& g) {
  Configuration upper = c_max(g);
  return box_size(upper);
}

void require_stable_enumerable(const Digraph& g, std::uint64_t cap) {
  const auto count = stable_count(g);
  if (count > cap)
    throw EnumerationCapExceeded("graph has " + (count == UINT64_MAX ? std::string("more than 2^64") : std::to_string(count)) +
                                     " stable configurations, above the enumeration cap of " + std::to_string(cap),
                                 cap);
}

Configuration stable_at(const Digraph& g, std::uint64_t index) {
  Configuration a(g.size());
  for (std::size_t v = g.size(); v-- > 0;) {
    const auto d = static_cast<std::uint64_t>(g.out_degree(v));
    a[v] = static_cast<std::int64_t>(index % d);
    index /= d;
  }
  return a;
}

std::vector<Configuration> enumerate_stable(const Digraph& g, std::uint64_t cap) {
  require_stable_enumerable(g, cap);
  const auto count = stable_count(g);
  std::vector<Configuration> all;
  all.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) all.push_back(stable_at(g, i));
  return all;
}

}  // namespace chipfire
