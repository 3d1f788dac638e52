#include <cmath>
#include <numbers>

#include "doctest.h"
#include "netmet/correspondence.hpp"
#include "netmet/distance.hpp"
#include "netmet/generators.hpp"
#include "netmet/isomorphism.hpp"
#include "netmet/network.hpp"
#include "support/oracle.hpp"

using namespace netmet;
using netmet::testing::random_small;
using netmet::testing::shuffled;

namespace {
const Network kBase = from_rows({{1, 2}, {3, 4}});
const Network kBlown = from_rows({{1, 1, 2, 2}, {1, 1, 2, 2}, {3, 3, 4, 4}, {3, 3, 4, 4}});
}  // namespace

TEST_SUITE("net-core") {
  TEST_CASE("network construction rejects bad input") {
    CHECK_THROWS_AS(Network(std::vector<std::string>{}, Matrix(0)), std::invalid_argument);
    CHECK_THROWS_AS(Network({"a", "a"}, Matrix(2)), std::invalid_argument);
    CHECK_THROWS_AS(Network({"a"}, Matrix(2)), std::invalid_argument);
    CHECK_THROWS_AS(from_rows({{1, NAN}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(from_rows({{INFINITY}}), std::invalid_argument);
    // asymmetric, negative, nonzero diagonal are all fine
    CHECK_NOTHROW(from_rows({{-1, 5}, {2, 7}}));
  }

  TEST_CASE("diameter") {
    CHECK(diameter(kBase) == 4.0);
    CHECK(diameter(single_node(-5)) == 5.0);
    CHECK(diameter(directed_circle(4)) == 3 * std::numbers::pi / 2);
  }

  TEST_CASE("is_generic") {
    CHECK(is_generic(kBase));
    CHECK_FALSE(is_generic(from_rows({{1, 1}, {3, 4}})));
    CHECK_FALSE(is_generic(constant_network(3, 7)));
    CHECK(is_generic(single_node(3)));
  }

  TEST_CASE("blow_up") {
    const std::size_t k[] = {2, 2};
    const Network b = blow_up(kBase, k);
    CHECK(b.weights() == kBlown.weights());
    CHECK(b.labels() == std::vector<std::string>{"(0,1)", "(0,2)", "(1,1)", "(1,2)"});

    const std::size_t ones[] = {1, 1};
    CHECK(blow_up(kBase, ones).weights() == kBase.weights());

    const std::size_t three[] = {3};
    CHECK(blow_up(single_node(2.5), three).weights() == Matrix(3, 2.5));

    const std::size_t zero[] = {2, 0};
    CHECK_THROWS_AS(blow_up(kBase, zero), std::invalid_argument);
    const std::size_t short_k[] = {2};
    CHECK_THROWS_AS(blow_up(kBase, short_k), std::invalid_argument);

    CHECK(exact_distance(kBase, b).value == 0.0);
  }

  TEST_CASE("skeletonize") {
    const auto sk = skeletonize(kBlown);
    CHECK(sk.skeleton.weights() == kBase.weights());
    CHECK(sk.class_of == std::vector<std::size_t>{0, 0, 1, 1});

    const auto c = skeletonize(constant_network(3, 1));
    CHECK(c.skeleton.weights() == Matrix(1, 1.0));
    CHECK(c.class_of == std::vector<std::size_t>{0, 0, 0});

    SplitMix64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      const Network g = random_network(1 + rng.next_below(5), -1, 1, rng.next());
      REQUIRE(is_generic(g));
      const auto s = skeletonize(g);
      CHECK(s.skeleton == g);
    }
  }

  TEST_CASE("skeleton uses least member label") {
    const Network x({"z", "b", "q"}, Matrix(3, std::vector<double>{0, 0, 1, 0, 0, 1, 2, 2, 3}));
    const auto sk = skeletonize(x);
    CHECK(sk.skeleton.labels() == std::vector<std::string>{"b", "q"});
    CHECK(sk.class_of == std::vector<std::size_t>{0, 0, 1});
  }

  TEST_CASE("skeletonize with tolerance takes connected components") {
    // rows drift by 0.1 per step: 0 ~ 1 ~ 2 at tolerance 0.1, chained
    const Network x = from_rows({{0, 0, 0}, {0.1, 0.1, 0.1}, {0.2, 0.2, 0.2}});
    CHECK(skeletonize(x, 0.0).skeleton.size() == 3);
    const auto loose = skeletonize(x, 0.1000001);
    CHECK(loose.skeleton.size() == 1);
    CHECK(loose.skeleton.weights() == Matrix(1, 0.0));
    CHECK_THROWS_AS(skeletonize(x, -1.0), std::invalid_argument);
  }

  TEST_CASE("canonical pseudometric") {
    const Matrix g = canonical_pseudometric(kBase);
    CHECK(g(0, 1) == 2.0);
    CHECK(g(1, 0) == 2.0);
    CHECK(g(0, 0) == 0.0);

    const Matrix gb = canonical_pseudometric(kBlown);
    CHECK(gb(2, 3) == 0.0);
    CHECK(gb(0, 1) == 0.0);

    const std::vector<NodeIndex> none;
    CHECK_THROWS_AS(canonical_pseudometric(kBase, none), std::invalid_argument);
  }

  TEST_CASE("canonical pseudometric is a pseudometric and detects the skeleton relation") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      const Network x = random_small(rng, 5, 3);
      const Matrix g = canonical_pseudometric(x);
      const auto sk = skeletonize(x);
      const std::size_t n = x.size();
      for (std::size_t a = 0; a < n; ++a) {
        CHECK(g(a, a) == 0.0);
        for (std::size_t b = 0; b < n; ++b) {
          CHECK(g(a, b) == g(b, a));
          CHECK((g(a, b) == 0.0) == (sk.class_of[a] == sk.class_of[b]));
          for (std::size_t c = 0; c < n; ++c) CHECK(g(a, c) <= g(a, b) + g(b, c) + 1e-12);
        }
      }
    }
  }

  TEST_CASE("quantize") {
    const Network q = quantize(from_rows({{1.2, 2.6}, {3.1, 4.0}}), 1.0);
    CHECK(q.weights() == from_rows({{1, 3}, {3, 4}}).weights());

    const Network on_grid = from_rows({{0.5, -1.5}, {2.0, 0.0}});
    CHECK(quantize(on_grid, 0.5) == on_grid);

    // ties go up
    CHECK(quantize(single_node(0.5), 1.0).weight(0, 0) == 1.0);
    CHECK(quantize(single_node(-0.5), 1.0).weight(0, 0) == 0.0);

    CHECK_THROWS_AS(quantize(kBase, 0.0), std::invalid_argument);

    SplitMix64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
      const Network x = random_network(4, -2, 2, rng.next());
      CHECK(exact_distance(x, quantize(x, 0.5)).value <= 0.25);
    }
  }

  TEST_CASE("extract_net") {
    for (double eps : {0.0, 0.5, 1.0}) {
      const auto e = extract_net(kBlown, eps);
      CHECK(e.subnetwork.size() == 2);
      CHECK(e.bound == 0.0);
    }

    const Network g = random_network(5, 0, 10, 17);
    const Matrix gamma = canonical_pseudometric(g);
    double min_gap = 1e300;
    for (std::size_t a = 0; a < 5; ++a)
      for (std::size_t b = a + 1; b < 5; ++b) min_gap = std::min(min_gap, gamma(a, b));
    const auto full = extract_net(g, min_gap * 0.5);
    CHECK(full.subnetwork == g);
    CHECK(full.bound == 0.0);

    const Network circle = directed_circle_reversible(16, 2.0);
    const auto e = extract_net(circle, 1.0);
    CHECK(e.subnetwork.size() < 16);
    CHECK(e.bound <= 1.0);
    CHECK(e.bound > 0.0);
  }

  TEST_CASE("extract_net bound is certified by the exact solver") {
    SplitMix64 rng(21);
    for (int trial = 0; trial < 30; ++trial) {
      const Network x = random_network(2 + rng.next_below(4), 0, 1, rng.next());
      const double eps = 0.5 * rng.next_unit();
      const auto e = extract_net(x, eps);
      CHECK(e.bound <= eps);
      CHECK(exact_distance(x, e.subnetwork).value <= e.bound);
    }
  }

  TEST_CASE("relabelling invariance") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
      const Network x = random_small(rng, 5, 3);
      const Network px = shuffled(x, rng);
      CHECK(diameter(x) == diameter(px));
      CHECK(is_generic(x) == is_generic(px));
      CHECK(skeletonize(x).skeleton.size() == skeletonize(px).skeleton.size());
      const Network y = random_small(rng, 3, 3);
      CHECK(exact_distance(x, y).value == exact_distance(px, shuffled(y, rng)).value);
    }
  }

  TEST_CASE("skeleton idempotence and blow-up round trip") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
      const Network x = random_small(rng, 5, 3);
      const Network sk = skeletonize(x).skeleton;
      const Network sk2 = skeletonize(sk).skeleton;
      CHECK(sk2.size() == sk.size());
      CHECK(strong_isomorphic(sk, sk2).has_value());

      const auto k = netmet::testing::random_multiplicities(rng, x.size(), 3);
      const Network skb = skeletonize(blow_up(x, k)).skeleton;
      CHECK(strong_isomorphic(skb, sk).has_value());
    }
  }
}
