#include "netmet/correspondence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace netmet {

Correspondence::Correspondence(std::size_t n_x, std::size_t n_y, std::vector<NodePair> pairs)
    : n_x_(n_x), n_y_(n_y), pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw std::invalid_argument("correspondence must be nonempty");
  for (const auto& [i, j] : pairs_) {
    if (i >= n_x_ || j >= n_y_)
      throw std::invalid_argument("pair (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") out of range for sizes " + std::to_string(n_x_) + "x" +
                                  std::to_string(n_y_));
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

Correspondence Correspondence::diagonal(std::size_t n) {
  std::vector<NodePair> pairs;
  for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(i, i);
  return Correspondence(n, n, std::move(pairs));
}

Correspondence Correspondence::product(std::size_t n_x, std::size_t n_y) {
  std::vector<NodePair> pairs;
  pairs.reserve(n_x * n_y);
  for (std::size_t i = 0; i < n_x; ++i)
    for (std::size_t j = 0; j < n_y; ++j) pairs.emplace_back(i, j);
  return Correspondence(n_x, n_y, std::move(pairs));
}

bool Correspondence::contains(NodePair p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

bool Correspondence::covers() const {
  std::vector<bool> hit_x(n_x_, false), hit_y(n_y_, false);
  for (const auto& [i, j] : pairs_) {
    hit_x[i] = true;
    hit_y[j] = true;
  }
  return std::all_of(hit_x.begin(), hit_x.end(), [](bool b) { return b; }) &&
         std::all_of(hit_y.begin(), hit_y.end(), [](bool b) { return b; });
}

Correspondence Correspondence::transposed() const {
  std::vector<NodePair> t;
  t.reserve(pairs_.size());
  for (const auto& [i, j] : pairs_) t.emplace_back(j, i);
  return Correspondence(n_y_, n_x_, std::move(t));
}

bool validate(const Correspondence& r, const Network& x, const Network& y) {
  return r.size() > 0 && r.n_x() == x.size() && r.n_y() == y.size() && r.covers();
}

double distortion(const Correspondence& r, const Network& x, const Network& y) {
  if (!validate(r, x, y)) throw std::invalid_argument("not a valid correspondence for these networks");
  double dis = 0.0;
  for (const auto& [a, b] : r.pairs())
    for (const auto& [c, d] : r.pairs()) dis = std::max(dis, std::abs(x.weight(a, c) - y.weight(b, d)));
  return dis;
}

Correspondence compose(const Correspondence& r, const Correspondence& s) {
  if (r.n_y() != s.n_x())
    throw std::invalid_argument("cannot compose: inner sizes " + std::to_string(r.n_y()) + " and " +
                                std::to_string(s.n_x()) + " differ");
  // Index S by its first coordinate.
  std::vector<std::vector<NodeIndex>> next(s.n_x());
  for (const auto& [y, z] : s.pairs()) next[y].push_back(z);
  std::vector<NodePair> out;
  for (const auto& [x, y] : r.pairs())
    for (NodeIndex z : next[y]) out.emplace_back(x, z);
  if (out.empty()) throw std::invalid_argument("composition is empty");
  return Correspondence(r.n_x(), s.n_y(), std::move(out));
}

Correspondence from_function_pair(std::span<const NodeIndex> f, std::span<const NodeIndex> g) {
  std::vector<NodePair> pairs;
  pairs.reserve(f.size() + g.size());
  for (std::size_t i = 0; i < f.size(); ++i) pairs.emplace_back(i, f[i]);
  for (std::size_t j = 0; j < g.size(); ++j) pairs.emplace_back(g[j], j);
  return Correspondence(f.size(), g.size(), std::move(pairs));
}

}  // namespace netmet
