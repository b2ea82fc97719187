#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "chipfire/game.hpp"
#include "chipfire/linalg.hpp"

namespace chipfire {

/// a·Δ⁻¹, exact.
struct EnergyVector {
  RationalVector value;
  friend bool operator==(const EnergyVector&, const EnergyVector&) = default;
};

enum class CfgOrdering { less, equal, greater, incomparable };

const char* to_string(CfgOrdering o) noexcept;

EnergyVector energy_vector(const Game& game, const Configuration& a);

/// det(Δ)·a·Δ⁻¹ = a·adj(Δ). Same order as the energy vector, integer entries.
std::vector<BigInt> scaled_energy(const Game& game, const Configuration& a);

/// Compares energy vectors in the containment order. Any configurations,
/// negative or inequivalent, are accepted.
CfgOrdering cfg_compare(const Game& game, const Configuration& a, const Configuration& b);

/// a ∼ b iff (a − b)·Δ⁻¹ is an integer vector.
bool are_equivalent(const Game& game, const Configuration& a, const Configuration& b);

struct ClassReport {
  /// Lexicographically smallest stable member.
  Configuration representative;
  /// Sorted by energy when the class is totally ordered, else in enumeration order.
  std::vector<Configuration> stable_members;
  Configuration critical;
  Configuration superstable;
  /// Weight of each entry of stable_members.
  std::vector<std::int64_t> weights;
  bool is_total_order = false;
  /// First incomparable pair met while checking totality.
  std::optional<std::pair<Configuration, Configuration>> incomparable;
};

/// One report per equivalence class, keyed by (and sorted by) the critical
/// member. The number of classes is checked against det Δ.
/// Throws EnumerationCapExceeded.
std::vector<ClassReport> partition_classes(const Game& game, std::uint64_t cap = kDefaultEnumerationCap,
                                           unsigned threads = 1);

/// x₀ = a, xₖ₊₁ = (xₖ + σᴹΔ)°, stopping at the first fixpoint (which is
/// included once). Requires a stable and non-negative.
std::vector<Configuration> linseq_chain(const Game& game, const Configuration& a);

struct ClassScan {
  Configuration critical;
  Configuration superstable;
  std::size_t member_count = 0;
  bool is_total_order = false;
  /// Members in increasing energy; empty when the order is not total.
  std::vector<Configuration> sorted_chain;
  std::optional<std::pair<Configuration, Configuration>> incomparable;
  /// The recurrence chain started from the superstable member.
  std::vector<Configuration> recurrence_chain;
  bool recurrence_covers_class = false;
};

struct ConjectureReport {
  std::vector<ClassScan> classes;
  bool all_total = true;
  bool all_chains_cover = true;
};

/// Per class: is the energy order total on the stable members? Also records
/// the recurrence chain from the superstable member and whether it visits
/// every stable member. Throws EnumerationCapExceeded.
ConjectureReport conjecture_scan(const Game& game, std::uint64_t cap = kDefaultEnumerationCap,
                                 unsigned threads = 1);

}  // namespace chipfire
