// Seeded random diagrams for property suites. Diagrams are closures of
// random braid words, so they are always drawable in the plane with exactly
// the listed crossings; the band and parity properties under test are only
// guaranteed for such diagrams.

#pragma once

#include <cstdint>

#include "vsl/diagram.hpp"

namespace vsl {

struct RandomDiagramOptions {
  int min_real = 0;       // classical + singular letters
  int max_real = 6;
  int max_virtual = 4;
  int min_strands = 1;
  int max_strands = 4;
  int max_extra_loops = 1;
  bool allow_singular = true;
};

Diagram random_diagram(std::uint64_t seed, const RandomDiagramOptions& opt = {});

}  // namespace vsl
