// Invariance battery: every local-move insertion site on every built-in
// fixture, plus the fixed before/after pairs for the non-local moves. The
// bracket, its h-extension and both split parts must agree exactly across
// each move, and the link component count must be preserved.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vsl {

struct BatteryRow {
  std::string name;
  int checks = 0;
  int failures = 0;
};

// scope: "all" or one move name (R1, R2, R3, RS1, RS2, V1, V2, V3v, V3c, V3s).
std::vector<BatteryRow> run_invariance_battery(const std::string& scope);

// Seeded cross-checks on random diagrams: state sum versus skein recursion,
// parity stability across weight maps, exponent bands of the split, and the
// singular-crossing identity.
std::vector<BatteryRow> run_randomized_checks(std::uint64_t seed, int n_diagrams);

}  // namespace vsl
