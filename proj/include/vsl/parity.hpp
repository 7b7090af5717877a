// Weight maps on magnetic-graph edges and the resulting state parity.
//
// A weight map assigns +1/-1 to every edge so that the two edges meeting at
// a bivalent vertex get opposite values. Each virtual crossing contributes
// the product of the weights of its two edges; the parity of the graph is
// the product over all virtual crossings. The parity does not depend on the
// weight-map choice (each component's assignment is free only up to a global
// flip, and two closed curves of a planar-drawable graph cross in an even
// number of virtual points).

#pragma once

#include <cstdint>
#include <vector>

#include "vsl/states.hpp"

namespace vsl {

struct WeightMap {
  std::vector<std::int8_t> weight;  // by edge id, +1 or -1
};

// Deterministic choice: per component, the edge containing the smallest arc
// identifier gets +1 and weights alternate from there; vertexless components
// get +1.
WeightMap canonical_weight_map(const MagneticGraph& g);

// Canonical map with each component's base weight flipped by a seeded coin.
WeightMap random_weight_map(const MagneticGraph& g, std::uint64_t seed);

int parity(const MagneticGraph& g, const WeightMap& w);

}  // namespace vsl
