#include "netmet/distance.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "netmet/error.hpp"
#include "netmet/motifs.hpp"

namespace netmet {

namespace {

// A search variable is either f(x) for a node x of X (values range over Y) or
// g(y) for a node y of Y (values range over X). Assigning value u to it adds
// the pair (x,u) resp. (u,y) to the relation.
struct Variable {
  bool from_x;
  NodeIndex node;
};

class Problem {
public:
  Problem(const Network& x, const Network& y) : x_(x), y_(y) {}

  const Network& x() const { return x_; }
  const Network& y() const { return y_; }

  std::size_t domain(const Variable& v) const { return v.from_x ? y_.size() : x_.size(); }

  NodePair pair_of(const Variable& v, NodeIndex value) const {
    return v.from_x ? NodePair{v.node, value} : NodePair{value, v.node};
  }

  // Distortion contributed by a single pair with itself.
  double self_cost(NodePair p) const {
    return std::abs(x_.weight(p.first, p.first) - y_.weight(p.second, p.second));
  }

  // Distortion between two pairs, both orders.
  double cross_cost(NodePair p, NodePair q) const {
    return std::max(std::abs(x_.weight(p.first, q.first) - y_.weight(p.second, q.second)),
                    std::abs(x_.weight(q.first, p.first) - y_.weight(q.second, p.second)));
  }

  // f-variables in X-node order, then g-variables in Y-node order.
  std::vector<Variable> natural_order() const {
    std::vector<Variable> vars;
    vars.reserve(x_.size() + y_.size());
    for (NodeIndex i = 0; i < x_.size(); ++i) vars.push_back({true, i});
    for (NodeIndex j = 0; j < y_.size(); ++j) vars.push_back({false, j});
    return vars;
  }

  // f-variables by decreasing row+column weight variance, then g-variables
  // likewise. Ties keep index order.
  std::vector<Variable> variance_order() const {
    auto by_variance = [](const Network& net, bool from_x) {
      const std::size_t n = net.size();
      std::vector<double> var(n);
      for (std::size_t v = 0; v < n; ++v) {
        double sum = 0.0, sq = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          sum += net.weight(v, k) + net.weight(k, v);
          sq += net.weight(v, k) * net.weight(v, k) + net.weight(k, v) * net.weight(k, v);
        }
        const double mean = sum / (2.0 * n);
        var[v] = sq / (2.0 * n) - mean * mean;
      }
      std::vector<NodeIndex> idx(n);
      std::iota(idx.begin(), idx.end(), NodeIndex{0});
      std::stable_sort(idx.begin(), idx.end(), [&](NodeIndex a, NodeIndex b) { return var[a] > var[b]; });
      std::vector<Variable> out;
      for (NodeIndex v : idx) out.push_back({from_x, v});
      return out;
    };
    auto vars = by_variance(x_, true);
    auto gs = by_variance(y_, false);
    vars.insert(vars.end(), gs.begin(), gs.end());
    return vars;
  }

  Correspondence to_correspondence(const std::vector<Variable>& order,
                                   const std::vector<NodeIndex>& values) const {
    std::vector<NodeIndex> f(x_.size()), g(y_.size());
    for (std::size_t k = 0; k < order.size(); ++k) (order[k].from_x ? f : g)[order[k].node] = values[k];
    return from_function_pair(f, g);
  }

private:
  const Network& x_;
  const Network& y_;
};

// Depth-first search over a fixed variable order with forward checking: for
// every unassigned variable and candidate value, the distortion that value
// would incur against the assigned pairs is tracked incrementally. A node is
// pruned when the assigned distortion, or the best achievable cost of some
// unassigned variable, reaches the bound.
class Search {
public:
  Search(const Problem& problem, std::vector<Variable> order)
      : p_(problem), order_(std::move(order)), depth_max_(order_.size()) {
    width_ = std::max(p_.x().size(), p_.y().size());
    // cost_[d] holds the candidate costs visible at depth d.
    cost_.assign((depth_max_ + 1) * depth_max_ * width_, 0.0);
    for (std::size_t k = 0; k < depth_max_; ++k)
      for (NodeIndex u = 0; u < p_.domain(order_[k]); ++u)
        at(0, k, u) = p_.self_cost(p_.pair_of(order_[k], u));
    values_.assign(depth_max_, 0);
    candidates_.resize(depth_max_);
  }

  // Shrinks `bound` (distortion units) to the best complete assignment found
  // below the given prefix, strictly below the incoming bound. Returns true
  // if an improvement was found; the best values are then in best().
  template <class Bound>
  bool minimise(std::span<const NodeIndex> prefix, Bound& bound, bool sort_values) {
    sort_values_ = sort_values;
    improved_ = false;
    double partial = 0.0;
    std::size_t depth = 0;
    for (NodeIndex v : prefix) {
      if (v >= p_.domain(order_[depth])) return false;
      partial = std::max(partial, at(depth, depth, v));
      assign(depth, v);
      ++depth;
      if (partial >= bound.get()) return false;
    }
    descend_min(depth, partial, bound);
    return improved_;
  }

  // First complete assignment (in order, ascending values) with distortion
  // <= target. Returns false if none exists.
  bool first_within(double target) {
    target_ = target;
    return descend_first(0, 0.0);
  }

  const std::vector<NodeIndex>& best() const { return best_; }
  const std::vector<NodeIndex>& current() const { return values_; }

private:
  double& at(std::size_t depth, std::size_t var, NodeIndex u) {
    return cost_[(depth * depth_max_ + var) * width_ + u];
  }

  // Fixes variable `depth` to v and derives the cost table of depth+1.
  void assign(std::size_t depth, NodeIndex v) {
    values_[depth] = v;
    const NodePair added = p_.pair_of(order_[depth], v);
    for (std::size_t k = depth + 1; k < depth_max_; ++k) {
      const std::size_t dom = p_.domain(order_[k]);
      for (NodeIndex u = 0; u < dom; ++u)
        at(depth + 1, k, u) =
            std::max(at(depth, k, u), p_.cross_cost(p_.pair_of(order_[k], u), added));
    }
  }

  // Max over unassigned variables of their cheapest candidate.
  double lookahead(std::size_t depth) {
    double lb = 0.0;
    for (std::size_t k = depth; k < depth_max_; ++k) {
      const std::size_t dom = p_.domain(order_[k]);
      double m = std::numeric_limits<double>::infinity();
      for (NodeIndex u = 0; u < dom; ++u) m = std::min(m, at(depth, k, u));
      lb = std::max(lb, m);
    }
    return lb;
  }

  template <class Bound>
  void descend_min(std::size_t depth, double partial, Bound& bound) {
    if (depth == depth_max_) {
      if (bound.offer(partial)) {
        best_ = values_;
        improved_ = true;
      }
      return;
    }
    if (std::max(partial, lookahead(depth)) >= bound.get()) return;

    const std::size_t dom = p_.domain(order_[depth]);
    auto& cand = candidates_[depth];
    cand.resize(dom);
    std::iota(cand.begin(), cand.end(), NodeIndex{0});
    if (sort_values_) {
      std::stable_sort(cand.begin(), cand.end(),
                       [&](NodeIndex a, NodeIndex b) { return at(depth, depth, a) < at(depth, depth, b); });
    }
    for (NodeIndex v : cand) {
      const double next = std::max(partial, at(depth, depth, v));
      if (next >= bound.get()) continue;
      assign(depth, v);
      descend_min(depth + 1, next, bound);
    }
  }

  bool descend_first(std::size_t depth, double partial) {
    if (depth == depth_max_) return true;
    if (std::max(partial, lookahead(depth)) > target_) return false;
    const std::size_t dom = p_.domain(order_[depth]);
    for (NodeIndex v = 0; v < dom; ++v) {
      const double next = std::max(partial, at(depth, depth, v));
      if (next > target_) continue;
      assign(depth, v);
      if (descend_first(depth + 1, next)) return true;
    }
    return false;
  }

  const Problem& p_;
  std::vector<Variable> order_;
  std::size_t depth_max_;
  std::size_t width_ = 0;
  std::vector<double> cost_;
  std::vector<NodeIndex> values_;
  std::vector<std::vector<NodeIndex>> candidates_;
  std::vector<NodeIndex> best_;
  bool sort_values_ = true;
  bool improved_ = false;
  double target_ = 0.0;
};

struct LocalBound {
  double value;
  double get() const { return value; }
  bool offer(double v) {
    if (v < value) {
      value = v;
      return true;
    }
    return false;
  }
};

// Monotone-decreasing incumbent shared between workers.
struct SharedBound {
  std::atomic<double> value;
  double get() const { return value.load(std::memory_order_relaxed); }
  bool offer(double v) {
    double cur = value.load(std::memory_order_relaxed);
    while (v < cur) {
      if (value.compare_exchange_weak(cur, v, std::memory_order_relaxed)) return true;
    }
    return false;
  }
};

double function_pair_distortion(const Problem& p, std::span<const NodeIndex> f,
                                std::span<const NodeIndex> g) {
  const std::size_t total = f.size() + g.size();
  auto pair = [&](std::size_t k) { return k < f.size() ? NodePair{k, f[k]} : NodePair{g[k - f.size()], k - f.size()}; };
  double dis = 0.0;
  for (std::size_t a = 0; a < total; ++a) {
    const NodePair pa = pair(a);
    dis = std::max(dis, p.self_cost(pa));
    for (std::size_t b = a + 1; b < total; ++b) dis = std::max(dis, p.cross_cost(pa, pair(b)));
  }
  return dis;
}

std::vector<NodeIndex> greedy_values(const Problem& p, const std::vector<Variable>& order) {
  std::vector<NodeIndex> values;
  std::vector<NodePair> chosen;
  values.reserve(order.size());
  chosen.reserve(order.size());
  for (const Variable& v : order) {
    NodeIndex best_u = 0;
    double best_c = std::numeric_limits<double>::infinity();
    for (NodeIndex u = 0; u < p.domain(v); ++u) {
      const NodePair cand = p.pair_of(v, u);
      double c = p.self_cost(cand);
      for (const NodePair& q : chosen) c = std::max(c, p.cross_cost(cand, q));
      if (c < best_c) {
        best_c = c;
        best_u = u;
      }
    }
    values.push_back(best_u);
    chosen.push_back(p.pair_of(v, best_u));
  }
  return values;
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace

DistanceResult upper_bound_product(const Network& x, const Network& y) {
  Correspondence r = Correspondence::product(x.size(), y.size());
  const double v = 0.5 * distortion(r, x, y);
  return DistanceResult{v, std::move(r)};
}

DistanceResult upper_bound_greedy(const Network& x, const Network& y) {
  const Problem p(x, y);
  const auto order = p.variance_order();
  Correspondence r = p.to_correspondence(order, greedy_values(p, order));
  const double v = 0.5 * distortion(r, x, y);
  return DistanceResult{v, std::move(r)};
}

DistanceResult exact_distance(const Network& x, const Network& y, const SolverOptions& options) {
  if (x.size() > options.node_budget || y.size() > options.node_budget)
    throw BudgetExceeded("exact solver node count (" + std::to_string(x.size()) + " and " +
                             std::to_string(y.size()) + " nodes)",
                         options.node_budget);
  const Problem p(x, y);
  const auto order = p.variance_order();

  // Incumbents: the greedy dive, and constant maps (a subset of the product
  // relation, so no worse than it).
  double incumbent = function_pair_distortion(p, std::vector<NodeIndex>(x.size(), 0),
                                              std::vector<NodeIndex>(y.size(), 0));
  {
    const auto gv = greedy_values(p, order);
    std::vector<NodeIndex> f(x.size()), g(y.size());
    for (std::size_t k = 0; k < order.size(); ++k) (order[k].from_x ? f : g)[order[k].node] = gv[k];
    incumbent = std::min(incumbent, function_pair_distortion(p, f, g));
  }
  if (x.size() == y.size()) {
    std::vector<NodeIndex> id(x.size());
    std::iota(id.begin(), id.end(), NodeIndex{0});
    incumbent = std::min(incumbent, function_pair_distortion(p, id, id));
  }

  // Phase 1: optimal value. Work is split over the values of the first two
  // variables; the result is the global minimum regardless of schedule.
  const unsigned threads = resolve_threads(options.threads);
  double optimum = incumbent;
  if (incumbent > 0.0 && (threads <= 1 || order.size() < 2)) {
    LocalBound bound{incumbent};
    Search search(p, order);
    search.minimise({}, bound, true);
    optimum = bound.value;
  } else if (incumbent > 0.0) {
    std::vector<std::array<NodeIndex, 2>> prefixes;
    for (NodeIndex a = 0; a < p.domain(order[0]); ++a)
      for (NodeIndex b = 0; b < p.domain(order[1]); ++b) prefixes.push_back({a, b});
    SharedBound bound{incumbent};
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      Search search(p, order);
      for (std::size_t k = next.fetch_add(1); k < prefixes.size(); k = next.fetch_add(1))
        search.minimise(prefixes[k], bound, true);
    };
    std::vector<std::jthread> pool;
    const unsigned n_workers = std::min<std::size_t>(threads, prefixes.size());
    for (unsigned t = 0; t < n_workers; ++t) pool.emplace_back(worker);
    pool.clear();
    optimum = bound.value.load();
  }

  // Phase 2: the lexicographically least (f, g) attaining the optimum.
  const auto natural = p.natural_order();
  Search search(p, natural);
  search.first_within(optimum);
  Correspondence witness = p.to_correspondence(natural, search.current());
  return DistanceResult{0.5 * optimum, std::move(witness)};
}

double lower_bound_diameter(const Network& x, const Network& y) {
  return 0.5 * std::abs(diameter(x) - diameter(y));
}

double lower_bound_motif(const Network& x, const Network& y, std::size_t n, std::size_t tuple_budget) {
  return 0.5 * hausdorff_linf(motif_set(x, n, tuple_budget), motif_set(y, n, tuple_budget));
}

DistanceReport distance_report(const Network& x, const Network& y, const ReportOptions& options) {
  using clock = std::chrono::steady_clock;
  DistanceReport report;
  report.n_x = x.size();
  report.n_y = y.size();

  auto timed = [&](const std::string& method, auto&& fn) {
    const auto t0 = clock::now();
    fn();
    report.timings.push_back(
        {method, std::chrono::duration<double>(clock::now() - t0).count()});
  };

  timed("diameter", [&] { report.lower_bounds.push_back({"diameter", lower_bound_diameter(x, y), {}}); });
  for (std::size_t n = 1; n <= options.motif_max_order; ++n) {
    const std::string method = "motif-" + std::to_string(n);
    timed(method, [&] {
      try {
        report.lower_bounds.push_back({method, lower_bound_motif(x, y, n, options.motif_budget), {}});
      } catch (const BudgetExceeded& e) {
        report.skipped.push_back({method, e.what()});
      }
    });
  }
  timed("product", [&] {
    auto r = upper_bound_product(x, y);
    report.upper_bounds.push_back({"product", r.value, std::move(r.witness)});
  });
  timed("greedy", [&] {
    auto r = upper_bound_greedy(x, y);
    report.upper_bounds.push_back({"greedy", r.value, std::move(r.witness)});
  });
  timed("exact", [&] {
    try {
      report.exact = exact_distance(x, y, {options.exact_budget, options.threads});
    } catch (const BudgetExceeded& e) {
      report.skipped.push_back({"exact", e.what()});
    }
  });
  return report;
}

}  // namespace netmet
