#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace netmet {

using NodeIndex = std::size_t;

// Row-major dense square matrix of doubles.
class Matrix {
public:
  Matrix() = default;
  explicit Matrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}
  Matrix(std::size_t n, std::vector<double> data);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const noexcept {
    return {data_.data() + i * n_, n_};
  }
  const std::vector<double>& data() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

// A finite network: distinct node labels plus a total real weight function on
// ordered node pairs (self-loops included). Weights need not be symmetric,
// nonnegative, or zero on the diagonal, but must be finite.
//
// Immutable once constructed.
class Network {
public:
  // Throws std::invalid_argument on empty label set, duplicate labels, size
  // mismatch, or non-finite weights.
  Network(std::vector<std::string> labels, Matrix weights);

  // Labels default to "0", "1", ...
  explicit Network(Matrix weights);

  std::size_t size() const noexcept { return labels_.size(); }
  double weight(NodeIndex i, NodeIndex j) const noexcept { return weights_(i, j); }
  const Matrix& weights() const noexcept { return weights_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(NodeIndex i) const noexcept { return labels_[i]; }

  // Restriction to the given nodes, in the given order.
  Network restrict_to(std::span<const NodeIndex> nodes) const;

  // Simultaneous permutation: node k of the result is node perm[k] of this.
  Network permuted(std::span<const NodeIndex> perm) const;

  friend bool operator==(const Network&, const Network&) = default;

private:
  std::vector<std::string> labels_;
  Matrix weights_;
};

// N_1(alpha).
Network single_node(double alpha);

// N_k(Sigma) from a list of rows, default labels.
Network from_rows(const std::vector<std::vector<double>>& rows);

// max |w(x, x')| over all entries.
double diameter(const Network& x);

// True iff all n^2 weights are pairwise distinct.
bool is_generic(const Network& x);

// Replaces node x by k_x copies labelled "(x,i)", i = 1..k_x, carrying x's
// in- and out-weights. Copies are ordered node-major.
Network blow_up(const Network& x, std::span<const std::size_t> multiplicities);

struct SkeletonResult {
  Network skeleton;
  std::vector<std::size_t> class_of;  // original node -> skeleton node
};

// Quotient by the relation "identical weight rows and columns". With
// tolerance > 0 the classes are connected components of the graph joining
// nodes at canonical-pseudometric distance <= tolerance. Skeleton nodes are
// ordered by first member; each carries its lexicographically least member
// label and that member's weights.
SkeletonResult skeletonize(const Network& x, double tolerance = 0.0);

// Gamma_A(x, x') = max( max_a |w(x,a) - w(x',a)|, max_a |w(a,x) - w(a,x')| ).
Matrix canonical_pseudometric(const Network& x, std::span<const NodeIndex> subset);
Matrix canonical_pseudometric(const Network& x);

// Snaps every weight to the nearest multiple of step (ties toward +inf).
Network quantize(const Network& x, double step);

struct NetExtraction {
  Network subnetwork;
  std::vector<NodeIndex> kept;  // ascending original indices
  double bound;                 // certified upper bound on d_N(x, subnetwork)
};

// Greedy farthest-point epsilon-net under Gamma_X, seeded at node 0.
NetExtraction extract_net(const Network& x, double epsilon);

}  // namespace netmet
