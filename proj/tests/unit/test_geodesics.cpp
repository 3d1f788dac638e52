#include <cmath>

#include "doctest.h"
#include "netmet/distance.hpp"
#include "netmet/generators.hpp"
#include "netmet/geodesics.hpp"
#include "support/oracle.hpp"

using namespace netmet;
using netmet::testing::random_small;

TEST_SUITE("geodesics") {
  TEST_CASE("endpoints and labels") {
    const Network x = from_rows({{1, 2}, {3, 4}});
    const Network y = single_node(0);
    const auto r = Correspondence::product(2, 1);
    const auto g0 = geodesic_point(x, y, r, 0.0);
    CHECK(g0.network.labels() == std::vector<std::string>{"(0|0)", "(1|0)"});
    CHECK(g0.network.weights() == x.weights());
    const auto g1 = geodesic_point(x, y, r, 1.0);
    CHECK(g1.network.weights() == Matrix(2, 0.0));
    const auto half = geodesic_point(x, y, r, 0.5);
    CHECK(half.network.weights() == Matrix(2, std::vector<double>{0.5, 1, 1.5, 2}));

    CHECK_THROWS_AS(geodesic_point(x, y, r, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(geodesic_point(x, y, r, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(geodesic_point(x, y, Correspondence(2, 1, {{0, 0}}), 0.5), std::invalid_argument);
  }

  TEST_CASE("sampled geodesics are linear in d_N") {
    SplitMix64 rng(51);
    const double ts[] = {0.0, 0.25, 0.5, 0.75, 1.0};
    for (int trial = 0; trial < 20; ++trial) {
      const Network x = random_network(1 + rng.next_below(3), -1, 1, rng.next());
      const Network y = random_network(1 + rng.next_below(3), -1, 1, rng.next());
      const double d = exact_distance(x, y).value;
      const auto pts = sample_geodesic(x, y, ts);
      REQUIRE(pts.size() == 5);
      CHECK(exact_distance(x, pts.front().network).value == 0.0);
      CHECK(exact_distance(y, pts.back().network).value == 0.0);
      for (const auto& a : pts)
        for (const auto& b : pts)
          CHECK(std::abs(exact_distance(a.network, b.network).value - std::abs(a.t - b.t) * d) <= 1e-9);
    }
  }

  TEST_CASE("midpoint") {
    SplitMix64 rng(52);
    for (int trial = 0; trial < 30; ++trial) {
      const Network x = random_small(rng, 3, 4);
      const Network y = random_small(rng, 3, 4);
      const double d = exact_distance(x, y).value;
      const Network m = midpoint(x, y);
      CHECK(std::abs(exact_distance(x, m).value - 0.5 * d) <= 1e-9);
      CHECK(std::abs(exact_distance(m, y).value - 0.5 * d) <= 1e-9);
    }
  }
}
