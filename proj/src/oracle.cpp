#include "chipfire/oracle.hpp"

#include <map>
#include <mutex>

#include "chipfire/dynamics.hpp"
#include "chipfire/recognition.hpp"
#include "chipfire/scripts.hpp"

namespace chipfire::oracle {
namespace {

std::vector<Configuration> all_stable(const Digraph& g, std::uint64_t cap) {
  Configuration top = c_max(g);
  if (box_size(top) > cap) throw EnumerationCapExceeded("stable box exceeds the enumeration cap", cap);
  std::vector<Configuration> out;
  Configuration a(g.size());
  for (;;) {
    out.push_back(a);
    std::size_t p = g.size();
    while (p > 0 && a[p - 1] == top[p - 1]) a[--p] = 0;
    if (p == 0) return out;
    ++a[p - 1];
  }
}

RationalVector energy(const RationalMatrix& inv, const Configuration& a) {
  RationalVector e(inv.cols());
  for (std::size_t i = 0; i < inv.rows(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < inv.cols(); ++j) e[j] += inv(i, j) * a[i];
  return e;
}

bool dominated_by(const RationalVector& x, const RationalVector& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

// x mod 1, entrywise; equal keys <=> equivalent configurations.
RationalVector residue(const RationalVector& e) {
  RationalVector r(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    BigInt whole = numerator(e[i]) / denominator(e[i]);
    if (e[i] < 0 && whole * denominator(e[i]) != numerator(e[i])) whole -= 1;
    r[i] = e[i] - Rational(whole);
  }
  return r;
}

// Calls visit(s) for every script of weight w with 0 ⪯ s ⪯ bound.
template <typename Visit>
void for_each_of_weight(const Script& bound, std::int64_t w, std::uint64_t& examined, std::uint64_t budget,
                        Visit&& visit) {
  const std::size_t n = bound.size();
  std::vector<std::int64_t> room(n + 1, 0);  // room[i] = Σ_{j ≥ i} bound_j
  for (std::size_t i = n; i-- > 0;) room[i] = room[i + 1] + bound[i];
  if (room[0] < w) return;

  Script s(n);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
    if (i + 1 == n) {
      s[i] = left;
      if (++examined > budget) throw SearchBoundExceeded("oracle script search exceeded its budget", budget);
      visit(static_cast<const Script&>(s));
      return;
    }
    const std::int64_t lo = std::max<std::int64_t>(0, left - room[i + 1]);
    const std::int64_t hi = std::min(left, bound[i]);
    for (std::int64_t x = lo; x <= hi; ++x) {
      s[i] = x;
      self(self, i + 1, left - x);
    }
  };
  rec(rec, 0, w);
}

}  // namespace

BigInt cofactor_determinant(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    BigInt term = cofactor_determinant(minor) * m(0, c);
    total += (c % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

bool critical_energy_max(const Digraph& g, const Configuration& a, std::uint64_t cap) {
  if (a.size() != g.size()) throw DimensionMismatch("configuration length does not match the graph");
  if (!is_non_negative(a)) throw NegativeInput("configuration must be non-negative");
  if (!is_stable(g, a)) throw NotStable("configuration must be stable");
  const RationalMatrix inv = inverse(g.reduced_laplacian());
  const RationalVector target = energy(inv, a);
  for (const auto& x : all_stable(g, cap)) {
    const RationalVector e = energy(inv, x);
    RationalVector diff(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) diff[i] = e[i] - target[i];
    if (is_integral(diff) && !dominated_by(e, target)) return false;
  }
  return true;
}

bool superstable_box(const Digraph& g, const Configuration& a, std::int64_t k, std::uint64_t cap,
                     std::uint64_t budget) {
  if (a.size() != g.size()) throw DimensionMismatch("configuration length does not match the graph");
  if (!is_non_negative(a)) throw NegativeInput("configuration must be non-negative");
  if (k < 1) throw InputError("box multiplier must be at least 1");
  const Script top = k * min_strong_script(g, budget);
  if (box_size(top) > cap) throw EnumerationCapExceeded("oracle script box exceeds the enumeration cap", cap);

  Script sigma(g.size());
  for (;;) {
    std::size_t p = g.size();
    while (p > 0 && sigma[p - 1] == top[p - 1]) sigma[--p] = 0;
    if (p == 0) return true;
    ++sigma[p - 1];
    if (is_non_negative(apply_script(g, a, sigma))) return false;
  }
}

Script min_strong_script(const Digraph& g, std::uint64_t budget) {
  const Script bound = strong_script_from_inverse(g);
  const auto sources = source_components(g);
  if (!is_g_strongly_positive(g, bound, sources))
    throw InvariantViolation("inverse-derived script " + to_string(bound) + " is not G-strongly positive");

  std::uint64_t examined = 0;
  const std::int64_t heaviest = weight(bound);
  std::optional<Script> best;
  std::int64_t best_weight = 0;
  for (std::int64_t w = 0; w <= heaviest && !best; ++w) {
    for_each_of_weight(bound, w, examined, budget, [&](const Script& s) {
      if (!is_g_strongly_positive(g, s, sources)) return;
      if (best)
        throw InvariantViolation("two lightest G-strongly positive scripts " + to_string(*best) + " and " +
                                 to_string(s));
      best = s;
      best_weight = w;
    });
  }
  if (!best) throw InvariantViolation("no G-strongly positive script below " + to_string(bound));

  const std::int64_t last = std::min<std::int64_t>(heaviest, best_weight + static_cast<std::int64_t>(g.size()));
  for (std::int64_t w = best_weight + 1; w <= last; ++w)
    for_each_of_weight(bound, w, examined, budget, [&](const Script& s) {
      if (is_g_strongly_positive(g, s, sources) && !componentwise_le(*best, s))
        throw InvariantViolation("G-strongly positive script " + to_string(s) + " does not dominate " +
                                 to_string(*best));
    });
  return *best;
}

CrossCheckReport cross_check(const Digraph& g, std::uint64_t cap, std::uint64_t budget) {
  const Game game(g);
  CrossCheckReport report;
  report.sigma_min = game.sigma_min();
  report.oracle_sigma_min = min_strong_script(g, budget);
  report.determinant = cofactor_determinant(g.reduced_laplacian());

  const auto stable = all_stable(g, cap);
  const RationalMatrix inv = inverse(g.reduced_laplacian());
  std::vector<RationalVector> energies;
  energies.reserve(stable.size());
  std::map<RationalVector, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < stable.size(); ++i) {
    energies.push_back(energy(inv, stable[i]));
    classes[residue(energies.back())].push_back(i);
  }
  report.class_count = classes.size();

  std::vector<char> energy_max(stable.size(), 0);
  for (const auto& [key, members] : classes)
    for (auto i : members) {
      bool dominates_all = true;
      for (auto j : members) dominates_all = dominates_all && dominated_by(energies[j], energies[i]);
      if (dominates_all) energy_max[i] = 1;
    }

  for (std::size_t i = 0; i < stable.size(); ++i) {
    const Configuration& a = stable[i];
    Disagreement d;
    d.configuration = a;
    d.energy_max = energy_max[i];
    try {
      d.fixpoint = is_critical_fixpoint(game, a).result;
      d.bounded = is_critical_bounded(game, a, cap).result;
      d.dual_superstable = is_superstable(game, game.c_max() - a, cap).result;
    } catch (const InvariantViolation& e) {
      d.error = e.what();
    }
    ++report.configurations_checked;
    if (!d.error.empty() || d.fixpoint != d.bounded || d.fixpoint != d.energy_max || d.fixpoint != d.dual_superstable)
      report.disagreements.push_back(std::move(d));
  }
  return report;
}

FuzzReport fuzz_campaign(std::size_t max_n, std::int64_t max_multiplicity, std::uint64_t count, std::uint64_t seed,
                         std::uint64_t cap, unsigned threads) {
  if (max_n == 0) throw InputError("fuzz needs n >= 1");
  struct Slot {
    bool skipped = false;
    std::uint64_t configurations = 0;
    std::optional<FuzzFailure> failure;
  };
  std::vector<Slot> slots(count);
  detail::parallel_for(count, threads, [&](std::size_t i) {
    const std::uint64_t graph_seed = seed + i;
    Digraph g = random_digraph(1 + i % max_n, max_multiplicity, graph_seed);
    try {
      auto report = cross_check(g, cap);
      slots[i].configurations = report.configurations_checked;
      if (!report.agree()) slots[i].failure = FuzzFailure{graph_seed, g, std::move(report), {}};
    } catch (const CapExceeded&) {
      slots[i].skipped = true;
    } catch (const InvariantViolation& e) {
      slots[i].failure = FuzzFailure{graph_seed, g, std::nullopt, e.what()};
    }
  });

  FuzzReport report;
  for (auto& s : slots) {
    if (s.skipped) {
      ++report.graphs_skipped;
      continue;
    }
    ++report.graphs_checked;
    report.configurations_checked += s.configurations;
    if (s.failure) report.failures.push_back(std::move(*s.failure));
  }
  return report;
}

}  // namespace chipfire::oracle
