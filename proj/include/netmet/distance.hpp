#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "netmet/correspondence.hpp"
#include "netmet/network.hpp"

namespace netmet {

inline constexpr std::size_t kDefaultNodeBudget = 7;
inline constexpr std::size_t kDefaultMotifBudget = 1'000'000;

struct SolverOptions {
  std::size_t node_budget = kDefaultNodeBudget;
  unsigned threads = 1;  // 0 = hardware concurrency
};

struct DistanceResult {
  double value = 0.0;
  Correspondence witness;
};

// Exact d_N by branch-and-bound over function pairs (f: X->Y, g: Y->X).
// Throws BudgetExceeded if either network has more than node_budget nodes.
DistanceResult exact_distance(const Network& x, const Network& y,
                              const SolverOptions& options = {});

// Half the distortion of the full product relation.
DistanceResult upper_bound_product(const Network& x, const Network& y);

// Greedy dive through the solver's variable order, each step taking the value
// with the smallest distortion increase. Always a function-pair witness.
DistanceResult upper_bound_greedy(const Network& x, const Network& y);

// 1/2 |diam X - diam Y|.
double lower_bound_diameter(const Network& x, const Network& y);

// 1/2 d_n(M_n(X), M_n(Y)). Throws BudgetExceeded if either n-tuple count
// exceeds tuple_budget.
double lower_bound_motif(const Network& x, const Network& y, std::size_t n,
                         std::size_t tuple_budget = kDefaultMotifBudget);

struct ReportOptions {
  std::size_t exact_budget = kDefaultNodeBudget;
  std::size_t motif_max_order = 2;
  std::size_t motif_budget = kDefaultMotifBudget;
  unsigned threads = 1;
};

struct BoundEntry {
  std::string method;
  double value = 0.0;
  std::optional<Correspondence> witness;  // set for upper bounds
};

struct SkippedEntry {
  std::string method;
  std::string reason;
};

struct TimingEntry {
  std::string method;
  double seconds = 0.0;
};

struct DistanceReport {
  std::size_t n_x = 0;
  std::size_t n_y = 0;
  std::vector<BoundEntry> lower_bounds;
  std::vector<BoundEntry> upper_bounds;
  std::optional<DistanceResult> exact;
  std::vector<SkippedEntry> skipped;
  std::vector<TimingEntry> timings;
};

// Runs every bound within budget and the exact solver when sizes permit.
// Never throws on budget; over-budget methods land in `skipped`.
DistanceReport distance_report(const Network& x, const Network& y,
                               const ReportOptions& options = {});

}  // namespace netmet
