#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chipfire/digraph.hpp"
#include "chipfire/game.hpp"
#include "chipfire/linalg.hpp"
#include "chipfire/vector.hpp"

/// Brute-force reference procedures. They avoid the recognizers, σᴹ from the
/// greedy algorithm, stabilization and the adjugate-based energy code; only
/// apply_script, is_stable, the strong-positivity predicate and plain
/// rational linear algebra are shared with the main library.
namespace chipfire::oracle {

inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

/// Laplace expansion along the first row. Exponential; small matrices only.
BigInt cofactor_determinant(const IntMatrix& m);

/// True iff a is the energy maximum among all stable configurations
/// equivalent to it, found by enumerating the whole stable box.
bool critical_energy_max(const Digraph& g, const Configuration& a, std::uint64_t cap = kDefaultEnumerationCap);

/// True iff no σ with 0 ≺ σ ⪯ k·σᴹ makes a − σΔ non-negative, with σᴹ taken
/// from `min_strong_script`.
bool superstable_box(const Digraph& g, const Configuration& a, std::int64_t k,
                     std::uint64_t cap = kDefaultEnumerationCap, std::uint64_t budget = kDefaultSearchBudget);

/// Minimum G-strongly positive script by searching scripts in order of
/// increasing weight inside the box bounded by `strong_script_from_inverse`.
/// The hit must be the only one of its weight, and every strongly positive
/// script up to n units heavier must dominate it. Throws SearchBoundExceeded
/// when more than `budget` scripts would be examined.
Script min_strong_script(const Digraph& g, std::uint64_t budget = kDefaultSearchBudget);

struct Disagreement {
  Configuration configuration;
  bool fixpoint = false;
  bool bounded = false;
  bool energy_max = false;
  bool dual_superstable = false;
  std::string error;
};

struct CrossCheckReport {
  std::uint64_t configurations_checked = 0;
  Script sigma_min;
  Script oracle_sigma_min;
  BigInt determinant;
  std::uint64_t class_count = 0;
  std::vector<Disagreement> disagreements;

  bool agree() const {
    return disagreements.empty() && sigma_min == oracle_sigma_min && determinant == class_count;
  }
};

/// Four-way criticality agreement on every stable configuration: fixpoint,
/// bounded box, energy maximum and superstability of the dual. Also compares
/// σᴹ with the oracle search and the class count with the cofactor determinant.
CrossCheckReport cross_check(const Digraph& g, std::uint64_t cap = kDefaultEnumerationCap,
                             std::uint64_t budget = kDefaultSearchBudget);

struct FuzzFailure {
  std::uint64_t seed;
  Digraph graph;
  std::optional<CrossCheckReport> report;
  std::string error;
};

struct FuzzReport {
  std::uint64_t graphs_checked = 0;
  std::uint64_t graphs_skipped = 0;
  std::uint64_t configurations_checked = 0;
  std::vector<FuzzFailure> failures;
};

/// Graph i (0 ≤ i < count) is random_digraph(1 + i mod max_n, max_multiplicity, seed + i).
/// Graphs whose enumeration exceeds the cap are skipped and counted.
FuzzReport fuzz_campaign(std::size_t max_n, std::int64_t max_multiplicity, std::uint64_t count, std::uint64_t seed,
                         std::uint64_t cap = kDefaultEnumerationCap, unsigned threads = 1);

}  // namespace chipfire::oracle
