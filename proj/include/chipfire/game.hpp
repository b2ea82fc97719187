#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "chipfire/digraph.hpp"
#include "chipfire/dynamics.hpp"
#include "chipfire/linalg.hpp"
#include "chipfire/vector.hpp"

namespace chipfire {

/// Default limit on the size of any exhaustively enumerated box.
inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// A chip-firing game on a fixed digraph, with the quantities every
/// recognizer needs computed once: σᴹ, its image σᴹΔ, c_max, det Δ and adj Δ.
class Game {
 public:
  explicit Game(Digraph graph);

  const Digraph& graph() const noexcept { return graph_; }
  std::size_t size() const noexcept { return graph_.size(); }
  const IntMatrix& laplacian() const noexcept { return graph_.reduced_laplacian(); }

  const Script& sigma_min() const noexcept { return sigma_min_; }
  /// σᴹΔ
  const Configuration& sigma_min_image() const noexcept { return sigma_min_image_; }
  const Configuration& c_max() const noexcept { return c_max_; }
  const SourceComponentSet& sources() const noexcept { return sources_; }

  const BigInt& determinant() const noexcept { return det_; }
  const BigIntMatrix& adjugate() const noexcept { return adj_; }

 private:
  Digraph graph_;
  Script sigma_min_;
  Configuration sigma_min_image_;
  Configuration c_max_;
  SourceComponentSet sources_;
  BigInt det_;
  BigIntMatrix adj_;
};

/// Number of points in the box 0 ⪯ x ⪯ upper, saturating at UINT64_MAX.
template <typename Tag>
std::uint64_t box_size(const IntVector<Tag>& upper) {
  std::uint64_t total = 1;
  for (auto u : upper) {
    const auto side = static_cast<std::uint64_t>(u) + 1;
    if (total > UINT64_MAX / side) return UINT64_MAX;
    total *= side;
  }
  return total;
}

/// Number of non-negative stable configurations, ∏ d⁺ᵢ (saturating).
std::uint64_t stable_count(const Digraph& g);

/// Throws EnumerationCapExceeded when the stable box is larger than `cap`.
void require_stable_enumerable(const Digraph& g, std::uint64_t cap);

/// The `index`-th stable configuration in lexicographic order (last vertex fastest).
Configuration stable_at(const Digraph& g, std::uint64_t index);

/// Every non-negative stable configuration exactly once, lexicographically.
/// Throws EnumerationCapExceeded.
std::vector<Configuration> enumerate_stable(const Digraph& g, std::uint64_t cap = kDefaultEnumerationCap);

/// Visits every script 0 ⪯ τ ⪯ upper in lexicographic order together with τΔ,
/// maintained incrementally. `visit(tau, image)` returns false to stop early.
/// Throws EnumerationCapExceeded when the box is larger than `cap`.
template <typename Visit>
void walk_script_box(const Digraph& g, const Script& upper, std::uint64_t cap, Visit&& visit) {
  const std::size_t n = g.size();
  if (upper.size() != n) throw DimensionMismatch("script box bound has the wrong length");
  if (!is_non_negative(upper)) throw NegativeScript("script box bound must be non-negative");
  if (box_size(upper) > cap)
    throw EnumerationCapExceeded("script box of " + to_string(upper) + " exceeds the enumeration cap", cap);
  const IntMatrix& lap = g.reduced_laplacian();
  // Σ upperᵢ·|Δᵢⱼ| bounds every intermediate image entry, so the walk itself cannot overflow.
  for (std::size_t j = 0; j < n; ++j) {
    std::int64_t bound = 0;
    for (std::size_t i = 0; i < n; ++i)
      bound = detail::checked_add(bound, detail::checked_mul(upper[i], lap(i, j) < 0 ? -lap(i, j) : lap(i, j)));
  }

  Script tau(n);
  Configuration image(n);
  if (!visit(static_cast<const Script&>(tau), static_cast<const Configuration&>(image))) return;
  for (;;) {
    std::size_t p = n;
    while (p > 0 && tau[p - 1] == upper[p - 1]) {
      --p;
      const auto reset = tau[p];
      for (std::size_t j = 0; j < n; ++j) image[j] -= reset * lap(p, j);
      tau[p] = 0;
    }
    if (p == 0) return;
    --p;
    ++tau[p];
    for (std::size_t j = 0; j < n; ++j) image[j] += lap(p, j);
    if (!visit(static_cast<const Script&>(tau), static_cast<const Configuration&>(image))) return;
  }
}

namespace detail {

/// Runs body(i) for i in [0, count) on up to `threads` workers. The first
/// exception thrown by any worker is rethrown on the calling thread.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < count; i += threads) body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail
}  // namespace chipfire
