#pragma once

#include <span>
#include <vector>

#include "netmet/correspondence.hpp"
#include "netmet/distance.hpp"
#include "netmet/network.hpp"

namespace netmet {

struct GeodesicPoint {
  double t = 0.0;
  Network network;  // nodes = pairs of R, labelled "(x|y)"
};

// Network on R's pairs with weight (1-t) w_X(x,x') + t w_Y(y,y').
// Throws std::invalid_argument for an invalid R or t outside [0,1].
GeodesicPoint geodesic_point(const Network& x, const Network& y, const Correspondence& r,
                             double t);

// Solves once for an optimal R and samples every t on it.
std::vector<GeodesicPoint> sample_geodesic(const Network& x, const Network& y,
                                           std::span<const double> ts,
                                           const SolverOptions& options = {});

Network midpoint(const Network& x, const Network& y, const SolverOptions& options = {});

}  // namespace netmet
