#include "netmet/isomorphism.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

#include "netmet/error.hpp"

namespace netmet {

namespace {

// Colour refinement run jointly on both networks so colours are comparable.
// Initial colour: self-loop weight. Each round a node's colour becomes its old
// colour plus the sorted multisets of (out-weight, neighbour colour) and
// (in-weight, neighbour colour). Stops when the partition is stable.
struct Colouring {
  std::vector<std::size_t> x;
  std::vector<std::size_t> y;
};

Colouring refine(const Network& a, const Network& b) {
  using Signature = std::tuple<std::size_t, std::vector<std::pair<double, std::size_t>>,
                               std::vector<std::pair<double, std::size_t>>>;
  const Network* nets[2] = {&a, &b};
  std::vector<std::size_t> colour[2];

  {
    std::map<double, std::size_t> ids;
    for (int s = 0; s < 2; ++s)
      for (std::size_t v = 0; v < nets[s]->size(); ++v) ids.emplace(nets[s]->weight(v, v), 0);
    std::size_t next = 0;
    for (auto& [w, id] : ids) id = next++;
    for (int s = 0; s < 2; ++s) {
      colour[s].resize(nets[s]->size());
      for (std::size_t v = 0; v < nets[s]->size(); ++v) colour[s][v] = ids.at(nets[s]->weight(v, v));
    }
  }

  std::size_t classes = 0;
  for (;;) {
    std::map<Signature, std::size_t> ids;
    std::vector<Signature> sig[2];
    for (int s = 0; s < 2; ++s) {
      const Network& n = *nets[s];
      for (std::size_t v = 0; v < n.size(); ++v) {
        std::vector<std::pair<double, std::size_t>> out, in;
        for (std::size_t u = 0; u < n.size(); ++u) {
          out.emplace_back(n.weight(v, u), colour[s][u]);
          in.emplace_back(n.weight(u, v), colour[s][u]);
        }
        std::sort(out.begin(), out.end());
        std::sort(in.begin(), in.end());
        sig[s].emplace_back(colour[s][v], std::move(out), std::move(in));
        ids.emplace(sig[s].back(), 0);
      }
    }
    std::size_t next = 0;
    for (auto& [k, id] : ids) id = next++;
    for (int s = 0; s < 2; ++s)
      for (std::size_t v = 0; v < nets[s]->size(); ++v) colour[s][v] = ids.at(sig[s][v]);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {std::move(colour[0]), std::move(colour[1])};
}

class Matcher {
public:
  Matcher(const Network& x, const Network& y, double epsilon)
      : x_(x), y_(y), eps_(epsilon), forward_(x.size()), used_(y.size(), false) {
    if (epsilon == 0.0) {
      colours_ = refine(x, y);
    } else {
      colours_.x.assign(x.size(), 0);
      colours_.y.assign(y.size(), 0);
    }
  }

  bool plausible() const {
    if (x_.size() != y_.size()) return false;
    auto cx = colours_.x, cy = colours_.y;
    std::sort(cx.begin(), cx.end());
    std::sort(cy.begin(), cy.end());
    return cx == cy;
  }

  // Calls visit(forward) for each bijection in lexicographic order until it
  // returns false.
  template <class Visit>
  void search(Visit&& visit) {
    if (!plausible()) return;
    descend(0, visit);
  }

private:
  bool same(double a, double b) const { return eps_ == 0.0 ? a == b : std::abs(a - b) <= eps_; }

  bool consistent(std::size_t depth, NodeIndex cand) const {
    if (!same(x_.weight(depth, depth), y_.weight(cand, cand))) return false;
    for (std::size_t k = 0; k < depth; ++k) {
      if (!same(x_.weight(depth, k), y_.weight(cand, forward_[k]))) return false;
      if (!same(x_.weight(k, depth), y_.weight(forward_[k], cand))) return false;
    }
    return true;
  }

  template <class Visit>
  bool descend(std::size_t depth, Visit& visit) {
    if (depth == x_.size()) return visit(forward_);
    for (NodeIndex c = 0; c < y_.size(); ++c) {
      if (used_[c] || colours_.x[depth] != colours_.y[c] || !consistent(depth, c)) continue;
      forward_[depth] = c;
      used_[c] = true;
      const bool go_on = descend(depth + 1, visit);
      used_[c] = false;
      if (!go_on) return false;
    }
    return true;
  }

  const Network& x_;
  const Network& y_;
  double eps_;
  Colouring colours_;
  Bijection forward_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<Bijection> strong_isomorphic(const Network& x, const Network& y, double epsilon) {
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
  std::optional<Bijection> found;
  Matcher m(x, y, epsilon);
  m.search([&](const Bijection& b) {
    found = b;
    return false;
  });
  return found;
}

WeakIsomorphism weak_isomorphic(const Network& x, const Network& y, double epsilon) {
  WeakIsomorphism out{false, std::nullopt, skeletonize(x), skeletonize(y)};
  out.skeleton_map = strong_isomorphic(out.skeleton_x.skeleton, out.skeleton_y.skeleton, epsilon);
  out.isomorphic = out.skeleton_map.has_value();
  return out;
}

std::vector<Bijection> enumerate_automorphisms(const Network& x, std::size_t size_budget) {
  if (x.size() > size_budget)
    throw BudgetExceeded("automorphism enumeration on " + std::to_string(x.size()) + " nodes", size_budget);
  std::vector<Bijection> all;
  Matcher m(x, x, 0.0);
  m.search([&](const Bijection& b) {
    all.push_back(b);
    return true;
  });
  return all;
}

}  // namespace netmet
