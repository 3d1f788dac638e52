#include "netmet/generators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace netmet {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Counterclockwise angle from sample j to sample k, in [0, 2 pi).
double ccw(std::size_t j, std::size_t k, std::size_t n) {
  const std::size_t steps = (k + n - j) % n;
  return kTwoPi * static_cast<double>(steps) / static_cast<double>(n);
}

}  // namespace

Network directed_circle(std::size_t n) {
  if (n < 1) throw std::invalid_argument("circle needs at least one point");
  Matrix w(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) w(j, k) = ccw(j, k, n);
  return Network(std::move(w));
}

Network directed_circle_reversible(std::size_t n, double rho) {
  if (n < 1) throw std::invalid_argument("circle needs at least one point");
  if (!(rho >= 1.0) || !std::isfinite(rho)) throw std::invalid_argument("reversibility rho must be >= 1");
  Matrix w(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) w(j, k) = std::min(ccw(j, k, n), rho * ccw(k, j, n));
  return Network(std::move(w));
}

Network constant_network(std::size_t n, double alpha) {
  if (n < 1) throw std::invalid_argument("network needs at least one node");
  return Network(Matrix(n, alpha));
}

Network random_network(std::size_t n, double low, double high, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("network needs at least one node");
  if (!(low < high)) throw std::invalid_argument("random range needs low < high");
  SplitMix64 rng(seed);
  Matrix w(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w(i, j) = low + (high - low) * rng.next_unit();
  return Network(std::move(w));
}

}  // namespace netmet
