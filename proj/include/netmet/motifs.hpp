#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "netmet/distance.hpp"
#include "netmet/network.hpp"

namespace netmet {

// M_n(X): the distinct n x n weight matrices realised by n-tuples of nodes
// (repetition allowed), deduplicated by exact equality and sorted
// lexicographically by row-major entries.
struct MotifSet {
  std::size_t order = 0;
  std::vector<Matrix> matrices;

  friend bool operator==(const MotifSet&, const MotifSet&) = default;
};

// Entry (i,j) = w(tuple[i], tuple[j]). Throws std::invalid_argument on an
// out-of-range index.
Matrix tuple_weight_matrix(const Network& x, std::span<const NodeIndex> tuple);

// Throws BudgetExceeded when |X|^n > tuple_budget.
MotifSet motif_set(const Network& x, std::size_t n,
                   std::size_t tuple_budget = kDefaultMotifBudget);

// Hausdorff distance with the entrywise-max matrix metric. Throws
// std::invalid_argument on order mismatch.
double hausdorff_linf(const MotifSet& a, const MotifSet& b);

// For generic X and Y of equal size whose injective-tuple matrix sets agree,
// returns a weight-preserving bijection (forward[i] = image of node i).
// Throws std::invalid_argument for non-generic input.
std::optional<std::vector<NodeIndex>> reconstruct_generic(
    const Network& x, const Network& y, std::size_t tuple_budget = kDefaultMotifBudget);

}  // namespace netmet
