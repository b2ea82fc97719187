#include "chipfire/digraph.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>

namespace chipfire {

const char* to_string(GraphErrorKind kind) noexcept {
  switch (kind) {
    case GraphErrorKind::no_vertices: return "NoVertices";
    case GraphErrorKind::bad_vertex: return "BadVertex";
    case GraphErrorKind::loop_arc: return "LoopArc";
    case GraphErrorKind::arc_from_sink: return "ArcFromSink";
    case GraphErrorKind::bad_multiplicity: return "BadMultiplicity";
    case GraphErrorKind::sink_unreachable: return "SinkUnreachable";
    case GraphErrorKind::not_laplacian_shaped: return "NotLaplacianShaped";
  }
  return "GraphError";
}

Digraph Digraph::build(std::size_t n, std::span<const Arc> arcs) {
  if (n == 0) throw GraphError(GraphErrorKind::no_vertices, "digraph needs at least one non-sink vertex");

  std::map<std::pair<Vertex, Vertex>, std::int64_t> merged;
  for (const Arc& arc : arcs) {
    if (arc.from > n || arc.to > n)
      throw GraphError(GraphErrorKind::bad_vertex,
                       "arc endpoint out of range: " + std::to_string(arc.from + 1) + "->" + std::to_string(arc.to + 1),
                       arc.from > n ? arc.from : arc.to);
    if (arc.from == arc.to)
      throw GraphError(GraphErrorKind::loop_arc, "loop arc at vertex " + std::to_string(arc.from + 1), arc.from);
    if (arc.from == n) throw GraphError(GraphErrorKind::arc_from_sink, "the sink must not emit arcs", n);
    if (arc.multiplicity < 1)
      throw GraphError(GraphErrorKind::bad_multiplicity,
                       "multiplicity " + std::to_string(arc.multiplicity) + " on arc " +
                           std::to_string(arc.from + 1) + "->" + std::to_string(arc.to + 1),
                       arc.from);
    auto& m = merged[{arc.from, arc.to}];
    m = detail::checked_add(m, arc.multiplicity);
  }

  Digraph g;
  g.n_ = n;
  g.arcs_.reserve(merged.size());
  for (const auto& [key, m] : merged) g.arcs_.push_back({key.first, key.second, m});

  g.first_arc_.assign(n + 2, 0);
  for (const Arc& arc : g.arcs_) ++g.first_arc_[arc.from + 1];
  for (std::size_t v = 0; v <= n; ++v) g.first_arc_[v + 1] += g.first_arc_[v];

  g.out_degree_.assign(n + 1, 0);
  g.reduced_ = IntMatrix(n, n);
  for (const Arc& arc : g.arcs_) {
    g.out_degree_[arc.from] = detail::checked_add(g.out_degree_[arc.from], arc.multiplicity);
    if (arc.to != n) g.reduced_(arc.from, arc.to) = -arc.multiplicity;
  }
  for (Vertex v = 0; v < n; ++v) g.reduced_(v, v) = g.out_degree_[v];

  // Backward search from the sink.
  std::vector<std::vector<Vertex>> in(n + 1);
  for (const Arc& arc : g.arcs_) in[arc.to].push_back(arc.from);
  std::vector<char> reaches(n + 1, 0);
  std::vector<Vertex> stack{n};
  reaches[n] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : in[v])
      if (!reaches[u]) {
        reaches[u] = 1;
        stack.push_back(u);
      }
  }
  // Name a dead end (no out-arcs at all) in preference to vertices that merely lead into one.
  std::optional<Vertex> culprit;
  for (Vertex v = 0; v < n; ++v)
    if (!reaches[v] && (!culprit || (g.out_degree_[v] == 0 && g.out_degree_[*culprit] != 0))) culprit = v;
  if (culprit)
    throw GraphError(GraphErrorKind::sink_unreachable,
                     "vertex " + std::to_string(*culprit + 1) + " has no directed path to the sink", *culprit);
  return g;
}

std::int64_t Digraph::multiplicity(Vertex from, Vertex to) const {
  for (const Arc& arc : out_arcs(from))
    if (arc.to == to) return arc.multiplicity;
  return 0;
}

std::span<const Arc> Digraph::out_arcs(Vertex v) const {
  if (v > n_) throw DimensionMismatch("vertex index out of range");
  return {arcs_.data() + first_arc_[v], first_arc_[v + 1] - first_arc_[v]};
}

IntMatrix reduced_laplacian(const Digraph& g) { return g.reduced_laplacian(); }

IntMatrix full_laplacian(const Digraph& g) {
  const std::size_t n = g.size();
  IntMatrix m(n + 1, n + 1);
  for (const Arc& arc : g.arcs()) m(arc.from, arc.to) = -arc.multiplicity;
  for (Vertex v = 0; v < n; ++v) m(v, v) = g.out_degree(v);
  return m;
}

namespace {

// Iterative Tarjan; returns the component index of every vertex.
std::vector<std::size_t> scc_labels(const Digraph& g, std::size_t& count) {
  const std::size_t total = g.size() + 1;
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(total, unvisited), low(total, 0), label(total, unvisited);
  std::vector<char> on_stack(total, 0);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::size_t>> call;  // (vertex, next arc offset)
  std::size_t next_index = 0;
  count = 0;

  for (Vertex root = 0; root < total; ++root) {
    if (index[root] != unvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      auto out = g.out_arcs(v);
      if (pos < out.size()) {
        Vertex w = out[pos++].to;
        if (index[w] == unvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          label[w] = count;
        } while (w != v);
        ++count;
      }
      Vertex done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  return label;
}

}  // namespace

SourceComponentSet source_components(const Digraph& g) {
  std::size_t count = 0;
  const auto label = scc_labels(g, count);
  std::vector<char> has_external_in(count, 0);
  for (const Arc& arc : g.arcs())
    if (label[arc.from] != label[arc.to]) has_external_in[label[arc.to]] = 1;

  std::vector<std::vector<Vertex>> members(count);
  for (Vertex v = 0; v <= g.size(); ++v) members[label[v]].push_back(v);

  SourceComponentSet result;
  for (std::size_t c = 0; c < count; ++c) {
    if (has_external_in[c] || c == label[g.sink()]) continue;
    result.push_back(std::move(members[c]));
  }
  std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return result;
}

Digraph from_reduced_laplacian(const IntMatrix& m) {
  if (!m.is_square() || m.rows() == 0)
    throw GraphError(GraphErrorKind::not_laplacian_shaped, "reduced Laplacian must be a non-empty square matrix");
  const std::size_t n = m.rows();
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < n; ++i) {
    if (m(i, i) <= 0)
      throw GraphError(GraphErrorKind::not_laplacian_shaped,
                       "diagonal entry of row " + std::to_string(i + 1) + " must be positive", i);
    std::int64_t surplus = m(i, i);
    for (Vertex j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m(i, j) > 0)
        throw GraphError(GraphErrorKind::not_laplacian_shaped,
                         "off-diagonal entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                             ") must be non-positive",
                         i);
      if (m(i, j) < 0) {
        arcs.push_back({i, j, -m(i, j)});
        surplus = detail::checked_add(surplus, m(i, j));
      }
    }
    if (surplus < 0)
      throw GraphError(GraphErrorKind::not_laplacian_shaped,
                       "row " + std::to_string(i + 1) + " has a negative sum", i);
    if (surplus > 0) arcs.push_back({i, n, surplus});
  }
  return Digraph::build(n, arcs);
}

Digraph random_digraph(std::size_t n, std::int64_t max_multiplicity, std::uint64_t seed) {
  if (n == 0) throw GraphError(GraphErrorKind::no_vertices, "random digraph needs n >= 1");
  if (max_multiplicity < 1) throw GraphError(GraphErrorKind::bad_multiplicity, "max multiplicity must be >= 1");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> mult(1, max_multiplicity);
  std::bernoulli_distribution extra(0.4);

  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);

  // order[k] points at the sink or at some earlier vertex in the order.
  std::map<std::pair<Vertex, Vertex>, std::int64_t> arcs;
  for (std::size_t k = 0; k < n; ++k) {
    std::uniform_int_distribution<std::size_t> pick(0, k);
    std::size_t slot = pick(rng);
    Vertex target = slot == k ? n : order[slot];
    arcs[{order[k], target}] = mult(rng);
  }
  for (Vertex from = 0; from < n; ++from)
    for (Vertex to = 0; to <= n; ++to) {
      if (from == to || arcs.count({from, to})) continue;
      if (extra(rng)) arcs[{from, to}] = mult(rng);
    }

  std::vector<Arc> list;
  for (const auto& [key, m] : arcs) list.push_back({key.first, key.second, m});
  return Digraph::build(n, list);
}

}  // namespace chipfire
