#include <doctest.h>

#include "chipfire/dynamics.hpp"
#include "chipfire/oracle.hpp"
#include "chipfire/scripts.hpp"
#include "fixtures.hpp"

using namespace chipfire;
using fixtures::g1;
using fixtures::g2;
using fixtures::g3;

TEST_CASE("G-positivity") {
  CHECK(is_g_positive(g2(), Script{1, 2, 1, 1}));
  CHECK_FALSE(is_g_positive(g2(), Script{1, 1, 1, 1}));
  CHECK_FALSE(is_g_positive(g2(), Script(4)));
  CHECK_FALSE(is_g_positive(g3(), Script{1, 1}));
  CHECK_THROWS_AS(is_g_positive(g2(), Script{1, -1, 1, 1}), NegativeScript);
}

TEST_CASE("G-strong positivity") {
  CHECK(is_g_strongly_positive(g2(), Script{1, 2, 1, 1}));
  CHECK(is_g_strongly_positive(g3(), Script{3, 1}));
  CHECK(is_g_strongly_positive(g1(), Script{1}));
  // σΔ = (0,0,0,2) is positive only outside the source component {1,2,3}.
  CHECK(is_g_positive(g2(), Script{0, 0, 0, 1}));
  CHECK_FALSE(is_g_strongly_positive(g2(), Script{0, 0, 0, 1}));
  CHECK_THROWS_AS(is_g_strongly_positive(g2(), Script{0, 0, 0, -1}), NegativeScript);
}

TEST_CASE("greedy minimum strong script with its trace") {
  const auto t2 = minimum_strong_script_trace(g2());
  CHECK(t2.script == Script{1, 2, 1, 1});
  CHECK(t2.increments == std::vector<Vertex>{1});
  CHECK(minimum_strong_script(g1()) == Script{1});
  const auto t3 = minimum_strong_script_trace(g3());
  CHECK(t3.script == Script{3, 1});
  CHECK(t3.increments == std::vector<Vertex>{0, 0});
}

TEST_CASE("strong script from the inverse") {
  CHECK(strong_script_from_inverse(g2()) == Script{12, 42, 30, 30});
  CHECK(laplacian_product(g2(), strong_script_from_inverse(g2())) == Configuration{18, 18, 18, 18});
  CHECK(strong_script_from_inverse(g1()) == Script{1});
  CHECK(strong_script_from_inverse(g3()) == Script{11, 4});
  CHECK(laplacian_product(g3(), Script{11, 4}) == Configuration{2, 2});
}

TEST_CASE("greedy result is minimal, policy independent and scale closed") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Digraph g = random_digraph(1 + seed % 4, 3, seed);
    const Script s = minimum_strong_script(g);
    CHECK(s == oracle::min_strong_script(g));
    CHECK(componentwise_le(s, strong_script_from_inverse(g)));
    const auto last = minimum_strong_script_trace(g, [](std::span<const Vertex> c) { return c.back(); });
    CHECK(last.script == s);
    for (std::int64_t m = 1; m <= 4; ++m) CHECK(is_g_strongly_positive(g, m * s));
  }
}
