#pragma once

#include <cstddef>
#include <cstdint>

#include "netmet/network.hpp"

namespace netmet {

// SplitMix64. The generator behind random_network; pinned so corpora are
// reproducible across implementations.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1) from the top 53 bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform on [0, bound).
  std::size_t next_below(std::size_t bound) {
    return static_cast<std::size_t>(next_unit() * static_cast<double>(bound));
  }

  // Independent child stream.
  SplitMix64 split() { return SplitMix64(next()); }

private:
  std::uint64_t state_;
};

// n equally spaced points on the circle, weight = counterclockwise angle
// (theta_k - theta_j) mod 2 pi.
Network directed_circle(std::size_t n);

// weight = min(ccw(j,k), rho * ccw(k,j)), rho >= 1.
Network directed_circle_reversible(std::size_t n, double rho);

Network constant_network(std::size_t n, double alpha);

// Entries low + (high - low) * u, u drawn row-major from SplitMix64(seed).
Network random_network(std::size_t n, double low, double high, std::uint64_t seed);

}  // namespace netmet
