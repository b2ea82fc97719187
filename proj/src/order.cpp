#include "chipfire/order.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "chipfire/recognition.hpp"

namespace chipfire {
namespace {

CfgOrdering compare_scaled(const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
  bool le = true, ge = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < y[i]) ge = false;
    if (x[i] > y[i]) le = false;
  }
  if (le && ge) return CfgOrdering::equal;
  if (le) return CfgOrdering::less;
  if (ge) return CfgOrdering::greater;
  return CfgOrdering::incomparable;
}

struct OrderCheck {
  bool total = true;
  std::vector<std::size_t> sorted;  // indices in increasing energy, valid when total
  std::optional<std::pair<std::size_t, std::size_t>> incomparable;
};

// Energies of distinct equivalent configurations are distinct, and a strict
// energy increase strictly increases the energy sum. Sorting by that sum and
// checking neighbours therefore decides totality, and a failing neighbour pair
// is incomparable.
OrderCheck check_total(const std::vector<std::vector<BigInt>>& energies) {
  OrderCheck check;
  std::vector<BigInt> sums(energies.size());
  for (std::size_t i = 0; i < energies.size(); ++i)
    for (const auto& e : energies[i]) sums[i] += e;
  check.sorted.resize(energies.size());
  std::iota(check.sorted.begin(), check.sorted.end(), 0);
  std::stable_sort(check.sorted.begin(), check.sorted.end(),
                   [&](std::size_t a, std::size_t b) { return sums[a] < sums[b]; });
  for (std::size_t k = 0; k + 1 < check.sorted.size(); ++k) {
    const auto lo = check.sorted[k], hi = check.sorted[k + 1];
    if (compare_scaled(energies[lo], energies[hi]) != CfgOrdering::less) {
      check.total = false;
      check.incomparable = std::pair{lo, hi};
      break;
    }
  }
  return check;
}

}  // namespace

const char* to_string(CfgOrdering o) noexcept {
  switch (o) {
    case CfgOrdering::less: return "less";
    case CfgOrdering::equal: return "equal";
    case CfgOrdering::greater: return "greater";
    case CfgOrdering::incomparable: return "incomparable";
  }
  return "incomparable";
}

std::vector<BigInt> scaled_energy(const Game& game, const Configuration& a) {
  if (a.size() != game.size()) throw DimensionMismatch("configuration length does not match the graph");
  std::vector<BigInt> e(game.size());
  for (std::size_t i = 0; i < game.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < game.size(); ++j) e[j] += game.adjugate()(i, j) * a[i];
  }
  return e;
}

EnergyVector energy_vector(const Game& game, const Configuration& a) {
  auto scaled = scaled_energy(game, a);
  EnergyVector e;
  e.value.reserve(scaled.size());
  for (auto& x : scaled) e.value.emplace_back(x, game.determinant());
  return e;
}

CfgOrdering cfg_compare(const Game& game, const Configuration& a, const Configuration& b) {
  return compare_scaled(scaled_energy(game, a), scaled_energy(game, b));
}

bool are_equivalent(const Game& game, const Configuration& a, const Configuration& b) {
  const Configuration diff = a - b;
  return is_integral(solve_left(diff.values(), game.laplacian()));
}

std::vector<ClassReport> partition_classes(const Game& game, std::uint64_t cap, unsigned threads) {
  require_stable_enumerable(game.graph(), cap);
  const auto count = stable_count(game.graph());

  std::vector<Configuration> key(count);
  detail::parallel_for(count, threads, [&](std::size_t i) {
    key[i] = critical_representative(game, stable_at(game.graph(), i));
  });

  std::map<Configuration, std::vector<std::uint64_t>> classes;
  for (std::uint64_t i = 0; i < count; ++i) classes[key[i]].push_back(i);
  if (game.determinant() != classes.size())
    throw InvariantViolation("found " + std::to_string(classes.size()) + " equivalence classes but det Δ = " +
                             game.determinant().str());

  std::set<Configuration> superstables;
  for (const auto& [critical, members] : classes) superstables.insert(game.c_max() - critical);

  std::vector<ClassReport> reports;
  reports.reserve(classes.size());
  for (const auto& [critical, indices] : classes) {
    ClassReport r;
    r.critical = critical;
    std::vector<Configuration> members;
    std::vector<std::vector<BigInt>> energies;
    bool has_critical = false, has_superstable = false;
    for (auto i : indices) {
      members.push_back(stable_at(game.graph(), i));
      energies.push_back(scaled_energy(game, members.back()));
      has_critical = has_critical || members.back() == critical;
      if (superstables.count(members.back())) {
        if (has_superstable) throw InvariantViolation("class of " + to_string(critical) + " has two superstables");
        has_superstable = true;
        r.superstable = members.back();
      }
    }
    if (!has_critical) throw InvariantViolation("critical key " + to_string(critical) + " is not in its class");
    if (!has_superstable) throw InvariantViolation("class of " + to_string(critical) + " has no superstable");
    r.representative = members.front();

    const OrderCheck check = check_total(energies);
    r.is_total_order = check.total;
    if (check.total) {
      for (auto k : check.sorted) r.stable_members.push_back(members[k]);
    } else {
      r.stable_members = members;
      r.incomparable = std::pair{members[check.incomparable->first], members[check.incomparable->second]};
    }
    for (const auto& m : r.stable_members) r.weights.push_back(weight(m));
    reports.push_back(std::move(r));
  }
  return reports;
}

std::vector<Configuration> linseq_chain(const Game& game, const Configuration& a) {
  if (a.size() != game.size()) throw DimensionMismatch("configuration length does not match the graph");
  if (!is_non_negative(a)) throw NegativeInput("configuration must be non-negative, got " + to_string(a));
  if (!is_stable(game.graph(), a)) throw NotStable("configuration must be stable, got " + to_string(a));

  const std::uint64_t limit = stable_count(game.graph());
  std::vector<Configuration> chain{a};
  for (;;) {
    Configuration next = stabilize(game.graph(), chain.back() + game.sigma_min_image()).stable;
    if (next == chain.back()) return chain;
    if (chain.size() > limit) throw InvariantViolation("recurrence chain from " + to_string(a) + " did not settle");
    chain.push_back(std::move(next));
  }
}

ConjectureReport conjecture_scan(const Game& game, std::uint64_t cap, unsigned threads) {
  ConjectureReport report;
  for (auto& cls : partition_classes(game, cap, threads)) {
    ClassScan scan;
    scan.critical = cls.critical;
    scan.superstable = cls.superstable;
    scan.member_count = cls.stable_members.size();
    scan.is_total_order = cls.is_total_order;
    if (cls.is_total_order) scan.sorted_chain = cls.stable_members;
    scan.incomparable = cls.incomparable;
    scan.recurrence_chain = linseq_chain(game, cls.superstable);
    scan.recurrence_covers_class = scan.recurrence_chain.size() == scan.member_count;
    report.all_total = report.all_total && scan.is_total_order;
    report.all_chains_cover = report.all_chains_cover && scan.recurrence_covers_class;
    report.classes.push_back(std::move(scan));
  }
  return report;
}

}  // namespace chipfire
