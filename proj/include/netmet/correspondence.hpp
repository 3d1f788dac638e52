#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "netmet/network.hpp"

namespace netmet {

using NodePair = std::pair<NodeIndex, NodeIndex>;

// A relation between the node sets of two networks, stored as sorted,
// duplicate-free index pairs. Being a correspondence (both projections
// surjective) is checked by covers()/validate(), not enforced here, so that
// arbitrary relations can be represented and rejected.
class Correspondence {
public:
  Correspondence() = default;
  // Sorts and deduplicates. Throws std::invalid_argument for out-of-range
  // indices or an empty pair list.
  Correspondence(std::size_t n_x, std::size_t n_y, std::vector<NodePair> pairs);

  static Correspondence diagonal(std::size_t n);
  static Correspondence product(std::size_t n_x, std::size_t n_y);

  std::size_t n_x() const noexcept { return n_x_; }
  std::size_t n_y() const noexcept { return n_y_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  const std::vector<NodePair>& pairs() const noexcept { return pairs_; }
  bool contains(NodePair p) const;

  // Both projections surjective.
  bool covers() const;

  Correspondence transposed() const;

  friend bool operator==(const Correspondence&, const Correspondence&) = default;

private:
  std::size_t n_x_ = 0;
  std::size_t n_y_ = 0;
  std::vector<NodePair> pairs_;
};

bool validate(const Correspondence& r, const Network& x, const Network& y);

// max over (x,y),(x',y') in R of |w_X(x,x') - w_Y(y,y')|. Plain O(|R|^2)
// loop; this is the reference the solver is checked against.
// Throws std::invalid_argument if validate() fails.
double distortion(const Correspondence& r, const Network& x, const Network& y);

// R o S = {(x,z) : exists y with (x,y) in R and (y,z) in S}.
Correspondence compose(const Correspondence& r, const Correspondence& s);

// graph(f) union transpose(graph(g)).
Correspondence from_function_pair(std::span<const NodeIndex> f, std::span<const NodeIndex> g);

}  // namespace netmet
