// Closures of virtual singular braid words. Braid diagrams drawn in a
// rectangle and closed with nested return arcs carry no intersections beyond
// the listed letters, so every closure is planar-drawable with exactly the
// crossings it names. That makes this builder the safe source of diagrams
// for the parity and band properties, which can fail on arbitrary abstract
// wirings.

#pragma once

#include <vector>

#include "vsl/diagram.hpp"

namespace vsl {

struct BraidLetter {
  int pos;  // crosses strand positions pos and pos+1, 0-based
  CrossingKind kind;
};

// Word read bottom to top; crossing ids follow word order. extra_loops adds
// crossing-free circles alongside the closure.
Diagram braid_closure(int strands, const std::vector<BraidLetter>& word, int extra_loops = 0);

}  // namespace vsl
