#include "doctest.h"
#include "netmet/distance.hpp"
#include "netmet/error.hpp"
#include "netmet/generators.hpp"
#include "netmet/isomorphism.hpp"
#include "support/oracle.hpp"

using namespace netmet;
using netmet::testing::all_correspondences_distance;
using netmet::testing::random_small;
using netmet::testing::shuffled;

TEST_SUITE("distance") {
  TEST_CASE("exact distance on small fixtures") {
    const auto r = exact_distance(single_node(2), single_node(5));
    CHECK(r.value == 1.5);
    CHECK(r.witness == Correspondence::product(1, 1));

    CHECK(exact_distance(single_node(3), constant_network(4, 3)).value == 0.0);

    const Network x = from_rows({{1, 2}, {3, 4}});
    CHECK(exact_distance(x, from_rows({{4, 3}, {2, 1}})).value == 0.0);

    CHECK(exact_distance(single_node(0), from_rows({{0, 1}, {1, 0}})).value == 0.5);
  }

  TEST_CASE("exact distance matches frozen brute-force values") {
    // tests/support/brute_force_oracle.py
    struct Case {
      std::uint64_t sx, sy;
      std::size_t nx, ny;
      double expected;
    };
    const Case cases[] = {
        {1, 2, 3, 3, 0.14099719873048783},
        {3, 4, 2, 3, 0.23663400062489498},
        {5, 6, 3, 2, 0.2535539243388103},
        {7, 8, 3, 3, 0.24212316311162285},
    };
    for (const auto& c : cases) {
      const Network x = random_network(c.nx, 0, 1, c.sx);
      const Network y = random_network(c.ny, 0, 1, c.sy);
      const auto r = exact_distance(x, y);
      CHECK(r.value == c.expected);
      CHECK(0.5 * distortion(r.witness, x, y) == r.value);
    }
  }

  TEST_CASE("budget guard") {
    const Network big = constant_network(8, 0);
    CHECK_THROWS_AS(exact_distance(big, single_node(0)), BudgetExceeded);
    CHECK_NOTHROW(exact_distance(big, single_node(0), {8, 1}));
  }

  TEST_CASE("solver equals enumeration over all correspondences") {
    SplitMix64 rng(12);
    for (int trial = 0; trial < 300; ++trial) {
      const Network x = random_small(rng, 3, 3);
      const Network y = random_small(rng, 3, 3);
      CHECK(exact_distance(x, y).value == all_correspondences_distance(x, y));
    }
  }

  TEST_CASE("witness is a function pair achieving the value") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
      const Network x = random_network(1 + rng.next_below(5), -1, 1, rng.next());
      const Network y = random_network(1 + rng.next_below(5), -1, 1, rng.next());
      const auto r = exact_distance(x, y);
      CHECK(validate(r.witness, x, y));
      CHECK(r.witness.size() <= x.size() + y.size());
      CHECK(0.5 * distortion(r.witness, x, y) == r.value);
    }
  }

  TEST_CASE("result is independent of thread count") {
    SplitMix64 rng(14);
    for (int trial = 0; trial < 20; ++trial) {
      const Network x = random_small(rng, 6, 5);
      const Network y = random_small(rng, 6, 5);
      const auto one = exact_distance(x, y, {7, 1});
      const auto many = exact_distance(x, y, {7, 4});
      CHECK(one.value == many.value);
      CHECK(one.witness == many.witness);
    }
  }

  TEST_CASE("pseudometric axioms") {
    SplitMix64 rng(15);
    for (int trial = 0; trial < 100; ++trial) {
      const Network x = random_small(rng, 4, 4);
      const Network y = random_small(rng, 4, 4);
      const Network z = random_small(rng, 4, 4);
      const double xy = exact_distance(x, y).value, yx = exact_distance(y, x).value;
      CHECK(exact_distance(x, x).value == 0.0);
      CHECK(xy == yx);
      CHECK(exact_distance(x, z).value <= xy + exact_distance(y, z).value + 1e-9);
    }
  }

  TEST_CASE("zero distance iff skeleta strongly isomorphic") {
    SplitMix64 rng(16);
    for (int trial = 0; trial < 200; ++trial) {
      const Network x = random_small(rng, 4, 2);
      // half the time a blow-up of a relabelled x
      Network y = random_small(rng, 4, 2);
      if (trial % 2 == 0) {
        const Network px = shuffled(x, rng);
        auto k = netmet::testing::random_multiplicities(rng, px.size(), 2);
        y = blow_up(px, k);
        if (y.size() > kDefaultNodeBudget) y = px;
      }
      const bool zero = exact_distance(x, y).value == 0.0;
      const bool iso = strong_isomorphic(skeletonize(x).skeleton, skeletonize(y).skeleton).has_value();
      CHECK(zero == iso);
    }
  }

  TEST_CASE("bounds") {
    const auto p = upper_bound_product(single_node(1), single_node(4));
    CHECK(p.value == 1.5);

    const Network g = from_rows({{0.5, 1.0, -2.0}, {3.0, 0.25, 7.0}, {-1.0, 2.5, 4.0}});
    // product of X with itself pairs every entry with every entry
    CHECK(upper_bound_product(g, g).value == 0.5 * (7.0 - -2.0));

    CHECK(lower_bound_diameter(single_node(0), single_node(6)) == 3.0);
    CHECK(lower_bound_motif(single_node(0), single_node(6), 1) == 3.0);
    CHECK(lower_bound_motif(single_node(2), constant_network(2, 2), 2) == 0.0);
    CHECK_THROWS_AS(lower_bound_motif(constant_network(20, 0), single_node(0), 5), BudgetExceeded);

    SplitMix64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
      const Network x = random_network(1 + rng.next_below(4), -1, 1, rng.next());
      const Network y = random_network(1 + rng.next_below(4), -1, 1, rng.next());
      const double exact = exact_distance(x, y).value;
      CHECK(lower_bound_diameter(x, y) <= exact);
      CHECK(lower_bound_motif(x, y, 2) <= exact);
      CHECK(upper_bound_product(x, y).value >= exact);
      CHECK(upper_bound_greedy(x, y).value >= exact);
    }
  }

  TEST_CASE("distance report") {
    const auto rep = distance_report(single_node(2), single_node(5));
    REQUIRE(rep.exact.has_value());
    CHECK(rep.exact->value == 1.5);
    for (const auto& lb : rep.lower_bounds) CHECK(lb.value <= 1.5);
    for (const auto& ub : rep.upper_bounds) CHECK(ub.value >= 1.5);

    const auto big = distance_report(random_network(20, 0, 1, 1), random_network(20, 0, 1, 2));
    CHECK_FALSE(big.exact.has_value());
    bool exact_skipped = false;
    for (const auto& s : big.skipped) exact_skipped |= s.method == "exact";
    CHECK(exact_skipped);
    for (const auto& lb : big.lower_bounds)
      for (const auto& ub : big.upper_bounds) CHECK(lb.value <= ub.value + 1e-12);

    const Network x = random_network(3, 0, 1, 5);
    const std::size_t k[] = {2, 1, 2};
    const auto blown = distance_report(x, blow_up(x, k));
    REQUIRE(blown.exact.has_value());
    CHECK(blown.exact->value == 0.0);
  }
}
