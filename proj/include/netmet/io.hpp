#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "netmet/distance.hpp"
#include "netmet/geodesics.hpp"
#include "netmet/motifs.hpp"
#include "netmet/network.hpp"

namespace netmet {

// Network document, version 1:
//
//   # comments run to end of line
//   netmet-network 1
//   labels p q
//   weights
//   1 2
//   3 4
//
// Labels are whitespace-free tokens. Weights are n^2 decimal literals in
// row-major order, free-form whitespace. Throws ParseError.
Network parse_network(std::string_view text);

// Shortest round-trip decimal rendering; parse_network(serialize_network(x)) == x.
std::string serialize_network(const Network& x);

Network read_network_file(const std::string& path);
void write_network_file(const Network& x, const std::string& path);

std::string format_double(double v);

// Flat "key = value" documents with a fixed key order. Timings follow a
// "[timings]" marker line and are the only non-deterministic content.
std::string format_report(const DistanceReport& report, const Network& x, const Network& y);
std::string format_motif_set(const MotifSet& m);
std::string format_correspondence(const Correspondence& r, const Network& x, const Network& y);

}  // namespace netmet
