#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "netmet/network.hpp"

namespace netmet {

// forward[i] is the image of node i.
using Bijection = std::vector<NodeIndex>;

inline constexpr std::size_t kDefaultAutomorphismBudget = 8;

// Weight-preserving bijection X -> Y, if any. With epsilon > 0 weights are
// compared up to epsilon; this is a heuristic for noisy data and disables
// the colour-refinement filter.
std::optional<Bijection> strong_isomorphic(const Network& x, const Network& y,
                                           double epsilon = 0.0);

struct WeakIsomorphism {
  bool isomorphic = false;
  std::optional<Bijection> skeleton_map;  // sk(X) -> sk(Y)
  SkeletonResult skeleton_x;
  SkeletonResult skeleton_y;
};

// Decided by strong isomorphism of skeleta.
WeakIsomorphism weak_isomorphic(const Network& x, const Network& y, double epsilon = 0.0);

// All weight-preserving self-bijections, lexicographic by forward map.
// Throws BudgetExceeded when |X| > size_budget.
std::vector<Bijection> enumerate_automorphisms(
    const Network& x, std::size_t size_budget = kDefaultAutomorphismBudget);

}  // namespace netmet
