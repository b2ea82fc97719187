#include <doctest.h>

#include <set>

#include "chipfire/recognition.hpp"
#include "fixtures.hpp"

using namespace chipfire;
using fixtures::g1;
using fixtures::g2;
using fixtures::g3;

TEST_CASE("fixpoint criticality") {
  const Game game(g2());
  const Verdict star = is_critical_fixpoint(game, Configuration{3, 1, 1, 0});
  CHECK(star.result);
  CHECK(star.script == Script{1, 2, 1, 1});
  CHECK(is_critical_fixpoint(game, Configuration{4, 1, 1, 1}).result);
  CHECK_FALSE(is_critical_fixpoint(game, Configuration{4, 0, 0, 1}).result);
  CHECK_THROWS_AS(is_critical_fixpoint(game, Configuration{6, 1, 1, 0}), NotStable);
  CHECK_THROWS_AS(is_critical_fixpoint(game, Configuration{-1, 1, 1, 0}), NegativeInput);
  CHECK_THROWS_AS(is_critical_fixpoint(game, Configuration{1, 1}), DimensionMismatch);
}

TEST_CASE("bounded-box criticality") {
  const Game game(g2());
  const Verdict star = is_critical_bounded(game, Configuration{3, 1, 1, 0});
  CHECK(star.result);
  CHECK_FALSE(star.witness.has_value());
  const Verdict other = is_critical_bounded(game, Configuration{4, 0, 0, 1});
  CHECK_FALSE(other.result);
  CHECK(other.witness == Script{0, 1, 1, 0});
  CHECK(is_critical_bounded(Game(g1()), Configuration{0}).result);
  CHECK_THROWS_AS(is_critical_bounded(game, Configuration{3, 1, 1, 0}, 10), EnumerationCapExceeded);
}

TEST_CASE("the box must contain σᴹ itself") {
  // Δ = [[4,−1],[−1,2]], σᴹ = (1,1), and (0,0) + σᴹΔ = (3,1) is already stable.
  const Game game(fixtures::from_json(R"({"vertices":3,"sink":3,"arcs":[[1,2,1],[1,3,3],[2,1,1],[2,3,1]]})"));
  REQUIRE(game.sigma_min() == Script{1, 1});
  const Configuration a{0, 0};
  CHECK_FALSE(is_critical_fixpoint(game, a).result);
  const Verdict inclusive = is_critical_bounded(game, a);
  CHECK_FALSE(inclusive.result);
  CHECK(inclusive.witness == Script{1, 1});
  CHECK(is_critical_bounded(game, a, kDefaultEnumerationCap, UpperEnd::exclusive).result);
}

TEST_CASE("superstability") {
  const Game game3(g3());
  const Verdict v = is_superstable(game3, Configuration{0, 3});
  CHECK_FALSE(v.result);
  CHECK(v.witness == Script{2, 1});
  CHECK(is_superstable(Game(g2()), Configuration{1, 0, 0, 1}).result);
  for (auto* make : {&g1, &g2, &g3}) {
    const Game game(make());
    CHECK(is_superstable(game, Configuration(game.size())).result);
  }
  CHECK_THROWS_AS(is_superstable(game3, Configuration{0, -1}), NegativeInput);
}

TEST_CASE("class representatives") {
  const Game game2(g2());
  CHECK(critical_representative(game2, Configuration{1, 0, 0, 1}) == Configuration{3, 1, 1, 0});
  CHECK(critical_representative(game2, Configuration{3, 1, 1, 0}) == Configuration{3, 1, 1, 0});
  CHECK(critical_representative(Game(g3()), Configuration{0, 3}) == Configuration{1, 5});
  CHECK(superstable_representative(game2, Configuration{3, 1, 1, 0}) == Configuration{1, 0, 0, 1});
  CHECK(superstable_representative(Game(g3()), Configuration{1, 5}) == Configuration{0, 1});
  CHECK(superstable_representative(Game(g1()), Configuration{0}) == Configuration{0});
  // Unstable, far-away input still lands on the right representatives.
  CHECK(critical_representative(game2, Configuration{10, 3, 0, 7}) ==
        critical_representative(game2, stabilize(g2(), Configuration{10, 3, 0, 7}).stable));
  CHECK(is_superstable(game2, superstable_representative(game2, Configuration{10, 3, 0, 7})).result);
}

TEST_CASE("duality between criticals and superstables") {
  const auto r2 = duality_check(Game(g2()));
  CHECK(r2.criticals.size() == 18);
  CHECK(r2.superstables.size() == 18);
  CHECK(r2.bijection);
  CHECK(r2.violations.empty());

  const auto r1 = duality_check(Game(g1()));
  CHECK(r1.criticals == std::vector<Configuration>{{0}, {1}});
  CHECK(r1.superstables == std::vector<Configuration>{{0}, {1}});
  CHECK(r1.bijection);

  const auto r3 = duality_check(Game(g3()), kDefaultEnumerationCap, 2);
  CHECK(std::set<Configuration>(r3.criticals.begin(), r3.criticals.end()) ==
        std::set<Configuration>{{1, 5}, {1, 4}});
  CHECK(r3.superstables == std::vector<Configuration>{{0, 0}, {0, 1}});
  CHECK(r3.bijection);
}

TEST_CASE("every stable configuration has a unique critical and superstable partner") {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    const Game game(random_digraph(1 + seed % 4, 3, seed));
    const auto report = duality_check(game);
    CHECK(report.bijection);
    CHECK(report.criticals.size() == game.determinant());
    for (const auto& a : enumerate_stable(game.graph())) {
      const Configuration c = critical_representative(game, a);
      CHECK(is_critical_fixpoint(game, c).result);
      CHECK(is_superstable(game, superstable_representative(game, a)).result);
    }
  }
}
