#include "netmet/motifs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "netmet/error.hpp"

namespace netmet {

namespace {

bool matrix_less(const Matrix& a, const Matrix& b) {
  return std::lexicographical_compare(a.data().begin(), a.data().end(), b.data().begin(),
                                      b.data().end());
}

void sort_unique(std::vector<Matrix>& ms) {
  std::sort(ms.begin(), ms.end(), matrix_less);
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
}

// n^k, or nullopt-like max() on overflow past `limit`.
std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t limit) {
  std::size_t r = 1;
  for (std::size_t k = 0; k < exp; ++k) {
    if (base != 0 && r > limit / base) return std::numeric_limits<std::size_t>::max();
    r *= base;
  }
  return r;
}

double linf(const Matrix& a, const Matrix& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) d = std::max(d, std::abs(a.data()[k] - b.data()[k]));
  return d;
}

double directed_hausdorff(const MotifSet& from, const MotifSet& to) {
  double h = 0.0;
  for (const Matrix& a : from.matrices) {
    double nearest = std::numeric_limits<double>::infinity();
    for (const Matrix& b : to.matrices) {
      nearest = std::min(nearest, linf(a, b));
      if (nearest <= h) break;  // cannot raise the max any more
    }
    h = std::max(h, nearest);
  }
  return h;
}

// Weight matrices of all injective n-tuples (n = |X|), sorted and deduplicated.
std::vector<Matrix> injective_tuple_matrices(const Network& x) {
  std::vector<NodeIndex> perm(x.size());
  std::iota(perm.begin(), perm.end(), NodeIndex{0});
  std::vector<Matrix> out;
  do {
    out.push_back(tuple_weight_matrix(x, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  sort_unique(out);
  return out;
}

}  // namespace

Matrix tuple_weight_matrix(const Network& x, std::span<const NodeIndex> tuple) {
  const std::size_t n = tuple.size();
  for (NodeIndex v : tuple)
    if (v >= x.size()) throw std::invalid_argument("tuple index " + std::to_string(v) + " out of range");
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = x.weight(tuple[i], tuple[j]);
  return m;
}

MotifSet motif_set(const Network& x, std::size_t n, std::size_t tuple_budget) {
  if (n == 0) throw std::invalid_argument("motif order must be >= 1");
  const std::size_t count = checked_power(x.size(), n, tuple_budget);
  if (count > tuple_budget)
    throw BudgetExceeded("motif enumeration of " + std::to_string(x.size()) + "^" + std::to_string(n) +
                             " tuples",
                         tuple_budget);
  MotifSet out{n, {}};
  out.matrices.reserve(count);
  std::vector<NodeIndex> tuple(n, 0);
  for (std::size_t k = 0; k < count; ++k) {
    out.matrices.push_back(tuple_weight_matrix(x, tuple));
    // odometer, last position fastest
    for (std::size_t pos = n; pos-- > 0;) {
      if (++tuple[pos] < x.size()) break;
      tuple[pos] = 0;
    }
  }
  sort_unique(out.matrices);
  return out;
}

double hausdorff_linf(const MotifSet& a, const MotifSet& b) {
  if (a.order != b.order)
    throw std::invalid_argument("motif sets have different orders (" + std::to_string(a.order) + " and " +
                                std::to_string(b.order) + ")");
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

std::optional<std::vector<NodeIndex>> reconstruct_generic(const Network& x, const Network& y,
                                                          std::size_t tuple_budget) {
  if (!is_generic(x) || !is_generic(y)) throw std::invalid_argument("reconstruction needs generic networks");
  if (x.size() != y.size()) return std::nullopt;
  const std::size_t n = x.size();
  std::size_t perms = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    perms *= k;
    if (perms > tuple_budget) throw BudgetExceeded("injective tuple enumeration", tuple_budget);
  }
  if (injective_tuple_matrices(x) != injective_tuple_matrices(y)) return std::nullopt;

  // The identity tuple of X has a distinct-entry matrix; its diagonal pins
  // the matching tuple of Y node by node.
  std::vector<NodeIndex> forward(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double self = x.weight(i, i);
    std::size_t j = 0;
    while (j < n && y.weight(j, j) != self) ++j;
    if (j == n) return std::nullopt;
    forward[i] = j;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (x.weight(i, k) != y.weight(forward[i], forward[k])) return std::nullopt;
  return forward;
}

}  // namespace netmet
