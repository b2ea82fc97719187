#include "chipfire/recognition.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace chipfire {
namespace {

void require_shape(const Game& game, const Configuration& a) {
  if (a.size() != game.size())
    throw DimensionMismatch("configuration has length " + std::to_string(a.size()) + ", graph has " +
                            std::to_string(game.size()) + " non-sink vertices");
}

void require_non_negative(const Game& game, const Configuration& a) {
  require_shape(game, a);
  if (!is_non_negative(a)) throw NegativeInput("configuration must be non-negative, got " + to_string(a));
}

void require_stable_non_negative(const Game& game, const Configuration& a) {
  require_non_negative(game, a);
  if (!is_stable(game.graph(), a)) throw NotStable("configuration must be stable, got " + to_string(a));
}

// (x + σᴹΔ)°
StabilizationResult recurrence_step(const Game& game, const Configuration& x) {
  return stabilize(game.graph(), x + game.sigma_min_image());
}

}  // namespace

Verdict is_critical_fixpoint(const Game& game, const Configuration& a) {
  require_stable_non_negative(game, a);
  auto step = recurrence_step(game, a);
  Verdict v;
  v.result = step.stable == a;
  if (v.result && step.script != game.sigma_min())
    throw InvariantViolation("critical configuration " + to_string(a) + " stabilized with script " +
                             to_string(step.script) + " instead of σᴹ = " + to_string(game.sigma_min()));
  v.script = std::move(step.script);
  return v;
}

Verdict is_critical_bounded(const Game& game, const Configuration& a, std::uint64_t cap, UpperEnd end) {
  require_stable_non_negative(game, a);
  const Script& top = game.sigma_min();
  Verdict v;
  v.result = true;
  Configuration probe(a.size());
  walk_script_box(game.graph(), top, cap, [&](const Script& tau, const Configuration& image) {
    if (is_zero(tau) || (end == UpperEnd::exclusive && tau == top)) return true;
    for (std::size_t i = 0; i < a.size(); ++i) probe[i] = a[i] + image[i];
    if (!is_stable(game.graph(), probe)) return true;
    v.result = false;
    v.witness = tau;
    return false;
  });
  return v;
}

Verdict is_superstable(const Game& game, const Configuration& a, std::uint64_t cap) {
  require_non_negative(game, a);
  const bool a_stable = is_stable(game.graph(), a);

  std::optional<Script> non_negative_witness;  // a − σΔ ⪰ 0
  std::optional<Script> stable_witness;        // a − σΔ ⪰ 0 and stable
  Configuration probe(a.size());
  walk_script_box(game.graph(), game.sigma_min(), cap, [&](const Script& sigma, const Configuration& image) {
    if (is_zero(sigma)) return true;
    for (std::size_t i = 0; i < a.size(); ++i) probe[i] = a[i] - image[i];
    if (!is_non_negative(probe)) return true;
    if (!non_negative_witness) non_negative_witness = sigma;
    if (!stable_witness && is_stable(game.graph(), probe)) stable_witness = sigma;
    return !a_stable ? false : !stable_witness.has_value();
  });

  if (a_stable && non_negative_witness.has_value() != stable_witness.has_value())
    throw InvariantViolation("superstability box tests disagree on " + to_string(a) +
                             ": the non-negativity form and the stability form give different verdicts");
  Verdict v;
  v.result = !non_negative_witness;
  v.witness = std::move(non_negative_witness);
  return v;
}

Configuration critical_representative(const Game& game, const Configuration& a) {
  require_non_negative(game, a);
  const std::uint64_t limit = stable_count(game.graph());
  Configuration x = stabilize(game.graph(), a).stable;
  for (std::uint64_t steps = 0;; ++steps) {
    Configuration next = recurrence_step(game, x).stable;
    if (next == x) return x;
    // The orbit stays inside one equivalence class of stable configurations.
    if (steps >= limit) throw InvariantViolation("recurrence iteration from " + to_string(a) + " did not settle");
    x = std::move(next);
  }
}

Configuration superstable_representative(const Game& game, const Configuration& a) {
  require_non_negative(game, a);
  Configuration dual = game.c_max() - a;

  std::int64_t deficit = 0;
  for (auto x : dual) deficit = std::max(deficit, -x);
  if (deficit > 0) {
    if (game.determinant() > std::numeric_limits<std::int64_t>::max())
      throw OverflowError("determinant does not fit in 64 bits");
    const auto det = static_cast<std::int64_t>(game.determinant());
    const std::int64_t shift = detail::checked_mul((deficit + det - 1) / det, det);
    for (auto& x : dual) x = detail::checked_add(x, shift);
  }

  Configuration result = game.c_max() - critical_representative(game, dual);

  // result ~ a  iff  (result − a)·adj Δ ≡ 0 (mod det Δ)
  const Configuration diff = result - a;
  for (std::size_t j = 0; j < game.size(); ++j) {
    BigInt s = 0;
    for (std::size_t i = 0; i < game.size(); ++i) s += game.adjugate()(i, j) * diff[i];
    if (s % game.determinant() != 0)
      throw InvariantViolation("dual representative " + to_string(result) + " is not equivalent to " + to_string(a));
  }
  return result;
}

DualityReport duality_check(const Game& game, std::uint64_t cap, unsigned threads) {
  require_stable_enumerable(game.graph(), cap);
  const auto count = stable_count(game.graph());

  std::vector<char> critical(count), superstable(count);
  detail::parallel_for(count, threads, [&](std::size_t i) {
    const Configuration a = stable_at(game.graph(), i);
    critical[i] = is_critical_fixpoint(game, a).result;
    superstable[i] = is_superstable(game, a, cap).result;
  });

  DualityReport report;
  std::set<Configuration> superstable_set;
  for (std::uint64_t i = 0; i < count; ++i) {
    const Configuration a = stable_at(game.graph(), i);
    if (critical[i]) report.criticals.push_back(a);
    if (superstable[i]) {
      report.superstables.push_back(a);
      superstable_set.insert(a);
    }
  }

  std::set<Configuration> hit;
  for (const auto& a : report.criticals) {
    Configuration dual = game.c_max() - a;
    if (!superstable_set.count(dual))
      report.violations.push_back("critical " + to_string(a) + " has non-superstable dual " + to_string(dual));
    hit.insert(dual);
    report.pairs.emplace_back(a, std::move(dual));
  }
  for (const auto& s : report.superstables)
    if (!hit.count(s))
      report.violations.push_back("superstable " + to_string(s) + " is not the dual of a critical configuration");
  if (report.criticals.size() != report.superstables.size())
    report.violations.push_back(std::to_string(report.criticals.size()) + " critical vs " +
                                std::to_string(report.superstables.size()) + " superstable configurations");
  report.bijection = report.violations.empty();
  return report;
}

}  // namespace chipfire
