#include "netmet/geodesics.hpp"

#include <stdexcept>

namespace netmet {

GeodesicPoint geodesic_point(const Network& x, const Network& y, const Correspondence& r, double t) {
  if (!validate(r, x, y)) throw std::invalid_argument("not a valid correspondence for these networks");
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("geodesic parameter must lie in [0,1]");
  const auto& pairs = r.pairs();
  const std::size_t m = pairs.size();
  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto& [a, b] : pairs) labels.push_back("(" + x.label(a) + "|" + y.label(b) + ")");
  Matrix w(m);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      w(p, q) = (1.0 - t) * x.weight(pairs[p].first, pairs[q].first) +
                t * y.weight(pairs[p].second, pairs[q].second);
  return GeodesicPoint{t, Network(std::move(labels), std::move(w))};
}

std::vector<GeodesicPoint> sample_geodesic(const Network& x, const Network& y, std::span<const double> ts,
                                           const SolverOptions& options) {
  for (double t : ts)
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("geodesic parameter must lie in [0,1]");
  const DistanceResult opt = exact_distance(x, y, options);
  std::vector<GeodesicPoint> out;
  out.reserve(ts.size());
  for (double t : ts) out.push_back(geodesic_point(x, y, opt.witness, t));
  return out;
}

Network midpoint(const Network& x, const Network& y, const SolverOptions& options) {
  const double half = 0.5;
  return sample_geodesic(x, y, std::span(&half, 1), options).front().network;
}

}  // namespace netmet
