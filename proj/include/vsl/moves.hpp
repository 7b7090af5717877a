// Local extended Reidemeister moves as arc surgeries, plus hand-picked
// before/after diagram pairs for the non-local moves. Kinks and clasps can
// be inserted at any arc or free loop; recognizing R3-type move sites in an
// abstract 4-valent graph is a subgraph-isomorphism problem, so those moves
// are covered by fixed pairs instead.

#pragma once

#include <string>
#include <vector>

#include "vsl/diagram.hpp"

namespace vsl {

// Insertion site: a named arc, or the index of a crossing-free loop.
struct Site {
  static Site arc(std::string token) { return Site{std::move(token), -1}; }
  static Site loop(int index) { return Site{{}, index}; }

  bool is_arc() const { return loop_index < 0; }
  bool operator==(const Site&) const = default;

  std::string token;
  int loop_index = -1;
};

enum class R2Variant { Parallel, Antiparallel };

// Classical kink of the given sign: one new crossing, two new arcs, the same
// strand passing twice.
Diagram insert_r1(const Diagram& d, const Site& site, bool positive);

// Virtual kink; its two passages always share an edge, so every state keeps
// its parity.
Diagram insert_v1(const Diagram& d, const Site& site);

// Cancelling classical clasp (one positive, one negative crossing) across
// two distinct sites.
Diagram insert_r2(const Diagram& d, const Site& a, const Site& b, R2Variant variant);

// Two virtual crossings across two distinct sites.
Diagram insert_v2(const Diagram& d, const Site& a, const Site& b);

struct MovePair {
  std::string name;  // R1, R2, R3, RS1, RS2, V1, V2, V3v, V3c, V3s
  Diagram before;
  Diagram after;
};

// At least one pair per move name, each side a small closed diagram.
const std::vector<MovePair>& builtin_fixture_pairs();

const std::vector<std::string>& move_names();

}  // namespace vsl
