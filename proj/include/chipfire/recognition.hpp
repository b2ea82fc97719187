#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chipfire/game.hpp"

namespace chipfire {

/// Outcome of a decision procedure. `witness` is the script that refutes the
/// property (if any); `script` is the stabilizing script of the fixpoint test.
struct Verdict {
  bool result = false;
  std::optional<Script> witness;
  std::optional<Script> script;
};

/// Critical iff (a + σᴹΔ)° = a. When critical, the stabilizing script must
/// be exactly σᴹ; anything else raises InvariantViolation.
/// Requires a stable and non-negative (NotStable, NegativeInput).
Verdict is_critical_fixpoint(const Game& game, const Configuration& a);

enum class UpperEnd { inclusive, exclusive };

/// Critical iff a + τΔ is unstable for every 0 ≺ τ ⪯ σᴹ. Scripts are tried
/// lexicographically; the first τ giving a stable configuration is returned
/// as witness.
///
/// `UpperEnd::exclusive` drops τ = σᴹ from the box. That variant is not a
/// criticality test: when a + σᴹΔ is already stable, σᴹ is the only witness.
Verdict is_critical_bounded(const Game& game, const Configuration& a,
                            std::uint64_t cap = kDefaultEnumerationCap, UpperEnd end = UpperEnd::inclusive);

/// Superstable iff a − σΔ has a negative entry for every 0 ≺ σ ⪯ σᴹ. The first
/// σ with a − σΔ ⪰ 0 is returned as witness. For stable a, the same walk also
/// evaluates the "a − σΔ is never a (non-negative) stable configuration" form
/// and raises InvariantViolation if the two disagree. Requires a ⪰ 0.
Verdict is_superstable(const Game& game, const Configuration& a, std::uint64_t cap = kDefaultEnumerationCap);

/// The critical configuration equivalent to a: iterate x ↦ (x + σᴹΔ)° from a°
/// until it stops moving. Requires a ⪰ 0.
Configuration critical_representative(const Game& game, const Configuration& a);

/// The superstable configuration equivalent to a, obtained as c_max − r where
/// r is the critical configuration equivalent to c_max − a (shifted into the
/// non-negative orthant by multiples of det(Δ)·𝟙 = (𝟙·adj Δ)Δ). Requires a ⪰ 0.
Configuration superstable_representative(const Game& game, const Configuration& a);

struct DualityReport {
  std::vector<Configuration> criticals;
  std::vector<Configuration> superstables;
  /// (critical a, c_max − a) for every critical a.
  std::vector<std::pair<Configuration, Configuration>> pairs;
  std::vector<std::string> violations;
  bool bijection = false;
};

/// Classifies every stable configuration and checks that a ↦ c_max − a maps
/// the critical set onto the superstable set. Throws EnumerationCapExceeded.
DualityReport duality_check(const Game& game, std::uint64_t cap = kDefaultEnumerationCap, unsigned threads = 1);

}  // namespace chipfire
