#include "netmet/network.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "netmet/correspondence.hpp"

namespace netmet {

Matrix::Matrix(std::size_t n, std::vector<double> data) : n_(n), data_(std::move(data)) {
  if (data_.size() != n * n)
    throw std::invalid_argument("matrix data has " + std::to_string(data_.size()) +
                                " entries, expected " + std::to_string(n * n));
}

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

}  // namespace

Network::Network(std::vector<std::string> labels, Matrix weights)
    : labels_(std::move(labels)), weights_(std::move(weights)) {
  if (labels_.empty()) throw std::invalid_argument("network must have at least one node");
  if (weights_.size() != labels_.size())
    throw std::invalid_argument("weight matrix is " + std::to_string(weights_.size()) +
                                "x" + std::to_string(weights_.size()) + " but there are " +
                                std::to_string(labels_.size()) + " labels");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate node label '" + l + "'");
  }
  for (double w : weights_.data()) {
    if (!std::isfinite(w)) throw std::invalid_argument("weights must be finite");
  }
}

Network::Network(Matrix weights) : Network(default_labels(weights.size()), std::move(weights)) {}

Network Network::restrict_to(std::span<const NodeIndex> nodes) const {
  const std::size_t m = nodes.size();
  std::vector<std::string> labels(m);
  Matrix w(m);
  for (std::size_t a = 0; a < m; ++a) {
    if (nodes[a] >= size()) throw std::invalid_argument("node index out of range");
    labels[a] = labels_[nodes[a]];
    for (std::size_t b = 0; b < m; ++b) w(a, b) = weights_(nodes[a], nodes[b]);
  }
  return Network(std::move(labels), std::move(w));
}

Network Network::permuted(std::span<const NodeIndex> perm) const {
  if (perm.size() != size()) throw std::invalid_argument("permutation has wrong length");
  return restrict_to(perm);
}

Network single_node(double alpha) { return Network(Matrix(1, alpha)); }

Network from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  Matrix w(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("matrix rows must be square");
    for (std::size_t j = 0; j < n; ++j) w(i, j) = rows[i][j];
  }
  return Network(std::move(w));
}

double diameter(const Network& x) {
  double d = 0.0;
  for (double w : x.weights().data()) d = std::max(d, std::abs(w));
  return d;
}

bool is_generic(const Network& x) {
  std::vector<double> values = x.weights().data();
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

Network blow_up(const Network& x, std::span<const std::size_t> multiplicities) {
  if (multiplicities.size() != x.size())
    throw std::invalid_argument("blow-up needs one multiplicity per node (got " +
                                std::to_string(multiplicities.size()) + ", expected " +
                                std::to_string(x.size()) + ")");
  std::vector<NodeIndex> origin;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (multiplicities[i] == 0)
      throw std::invalid_argument("blow-up multiplicities must be positive");
    for (std::size_t c = 1; c <= multiplicities[i]; ++c) {
      origin.push_back(i);
      labels.push_back("(" + x.label(i) + "," + std::to_string(c) + ")");
    }
  }
  const std::size_t m = origin.size();
  Matrix w(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) w(a, b) = x.weight(origin[a], origin[b]);
  return Network(std::move(labels), std::move(w));
}

namespace {

double gamma_pair(const Network& x, NodeIndex p, NodeIndex q, std::span<const NodeIndex> subset) {
  double g = 0.0;
  for (NodeIndex a : subset) {
    g = std::max(g, std::abs(x.weight(p, a) - x.weight(q, a)));
    g = std::max(g, std::abs(x.weight(a, p) - x.weight(a, q)));
  }
  return g;
}

std::vector<NodeIndex> all_nodes(std::size_t n) {
  std::vector<NodeIndex> v(n);
  std::iota(v.begin(), v.end(), NodeIndex{0});
  return v;
}

}  // namespace

Matrix canonical_pseudometric(const Network& x, std::span<const NodeIndex> subset) {
  if (subset.empty()) throw std::invalid_argument("canonical pseudometric needs a nonempty subset");
  for (NodeIndex a : subset)
    if (a >= x.size()) throw std::invalid_argument("subset index out of range");
  const std::size_t n = x.size();
  Matrix g(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) g(p, q) = g(q, p) = gamma_pair(x, p, q, subset);
  return g;
}

Matrix canonical_pseudometric(const Network& x) {
  const auto nodes = all_nodes(x.size());
  return canonical_pseudometric(x, nodes);
}

SkeletonResult skeletonize(const Network& x, double tolerance) {
  if (!(tolerance >= 0.0)) throw std::invalid_argument("skeleton tolerance must be >= 0");
  const std::size_t n = x.size();
  const Matrix gamma = canonical_pseudometric(x);

  // Components of the graph {Gamma <= tolerance}, numbered by first member.
  constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> class_of(n, kUnassigned);
  std::vector<std::vector<NodeIndex>> members;
  for (std::size_t seed = 0; seed < n; ++seed) {
    if (class_of[seed] != kUnassigned) continue;
    const std::size_t cls = members.size();
    members.emplace_back();
    std::vector<NodeIndex> stack{seed};
    class_of[seed] = cls;
    while (!stack.empty()) {
      const NodeIndex u = stack.back();
      stack.pop_back();
      members[cls].push_back(u);
      for (std::size_t v = 0; v < n; ++v) {
        if (class_of[v] == kUnassigned && gamma(u, v) <= tolerance) {
          class_of[v] = cls;
          stack.push_back(v);
        }
      }
    }
  }

  std::vector<NodeIndex> reps;
  reps.reserve(members.size());
  for (const auto& m : members) {
    reps.push_back(*std::min_element(m.begin(), m.end(), [&](NodeIndex a, NodeIndex b) {
      return x.label(a) < x.label(b);
    }));
  }
  return SkeletonResult{x.restrict_to(reps), std::move(class_of)};
}

Network quantize(const Network& x, double step) {
  if (!(step > 0.0) || !std::isfinite(step))
    throw std::invalid_argument("quantization step must be positive and finite");
  const std::size_t n = x.size();
  Matrix w(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w(i, j) = std::floor(x.weight(i, j) / step + 0.5) * step;
  return Network(x.labels(), std::move(w));
}

NetExtraction extract_net(const Network& x, double epsilon) {
  if (!(epsilon >= 0.0)) throw std::invalid_argument("net radius must be >= 0");
  const std::size_t n = x.size();
  const Matrix gamma = canonical_pseudometric(x);

  std::vector<bool> kept(n, false);
  std::vector<double> to_net(n);
  kept[0] = true;
  for (std::size_t v = 0; v < n; ++v) to_net[v] = gamma(v, 0);
  for (;;) {
    std::size_t far = 0;
    for (std::size_t v = 1; v < n; ++v)
      if (to_net[v] > to_net[far]) far = v;
    if (to_net[far] <= epsilon) break;
    kept[far] = true;
    for (std::size_t v = 0; v < n; ++v) to_net[v] = std::min(to_net[v], gamma(v, far));
  }

  std::vector<NodeIndex> kept_nodes;
  std::vector<std::size_t> position(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (kept[v]) {
      position[v] = kept_nodes.size();
      kept_nodes.push_back(v);
    }
  }

  std::vector<NodePair> pairs;
  for (std::size_t v = 0; v < n; ++v)
    for (NodeIndex s : kept_nodes)
      if (v == s || gamma(v, s) <= epsilon) pairs.emplace_back(v, position[s]);

  Network sub = x.restrict_to(kept_nodes);
  const Correspondence r(n, kept_nodes.size(), std::move(pairs));
  const double bound = 0.5 * distortion(r, x, sub);
  return NetExtraction{std::move(sub), std::move(kept_nodes), bound};
}

}  // namespace netmet
