#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "chipfire/matrix.hpp"
#include "chipfire/vector.hpp"

namespace chipfire {

struct Arc {
  Vertex from;
  Vertex to;
  std::int64_t multiplicity;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Loop-free directed multigraph on vertices 0..n where n is a global sink:
/// the sink emits nothing and is reachable from every other vertex.
///
/// Parallel arcs are stored as a multiplicity per ordered pair. The object is
/// immutable once built, so it can be shared freely between threads.
class Digraph {
 public:
  /// Validates and builds a digraph with `n` non-sink vertices. Repeated
  /// (from, to) pairs are summed. Throws GraphError.
  static Digraph build(std::size_t n, std::span<const Arc> arcs);

  /// Number of non-sink vertices.
  std::size_t size() const noexcept { return n_; }
  Vertex sink() const noexcept { return n_; }

  std::int64_t out_degree(Vertex v) const { return out_degree_.at(v); }
  std::int64_t multiplicity(Vertex from, Vertex to) const;

  /// Merged arcs sorted by (from, to).
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  /// Arcs leaving `v`, sorted by target.
  std::span<const Arc> out_arcs(Vertex v) const;

  /// n×n matrix: out-degree on the diagonal, minus arc multiplicities elsewhere.
  const IntMatrix& reduced_laplacian() const noexcept { return reduced_; }

  friend bool operator==(const Digraph& a, const Digraph& b) { return a.n_ == b.n_ && a.arcs_ == b.arcs_; }

 private:
  Digraph() = default;

  std::size_t n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> first_arc_;  // CSR offsets into arcs_, size n+2
  std::vector<std::int64_t> out_degree_;
  IntMatrix reduced_;
};

/// Strongly connected components with no in-arc from outside themselves.
/// Each component is sorted; components are ordered by smallest member.
using SourceComponentSet = std::vector<std::vector<Vertex>>;

IntMatrix reduced_laplacian(const Digraph& g);

/// (n+1)×(n+1) Laplacian including the sink row (all zero) and column.
IntMatrix full_laplacian(const Digraph& g);

SourceComponentSet source_components(const Digraph& g);

/// Inverse of `reduced_laplacian`: off-diagonal entries become arcs and each
/// row-sum surplus becomes arcs to the sink.
Digraph from_reduced_laplacian(const IntMatrix& m);

/// Deterministic random global-sink digraph: a random spanning in-tree towards
/// the sink plus sprinkled extra arcs, every multiplicity in [1, max_multiplicity].
Digraph random_digraph(std::size_t n, std::int64_t max_multiplicity, std::uint64_t seed);

}  // namespace chipfire
