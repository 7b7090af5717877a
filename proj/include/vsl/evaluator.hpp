// State-sum evaluation: the bracket polynomial, its parity-enhanced
// h-extension, the split into complementary exponent bands, and per-state
// contributions.
//
// Every classical/singular crossing resolves two ways, so a diagram has
// 2^(c+s) states. Each state S contributes
//
//   A^(2a+4b) (-A^2-A^-2)^(alpha+||S||) (-A^4-A^-4)^beta h^((1-i)/2)
//
// and the full polynomial is (-1)^c times the sum over all states. The sum
// is an embarrassingly parallel map-reduce; workers accumulate into local
// polynomials which are merged at the end.

#pragma once

#include <cstdint>
#include <utility>

#include "vsl/diagram.hpp"
#include "vsl/laurent.hpp"
#include "vsl/states.hpp"

namespace vsl {

inline constexpr std::uint64_t kDefaultStateBudget = std::uint64_t{1} << 20;

struct InvariantResult {
  Counts counts;
  int k = 0;                     // link components of the underlying immersion
  std::uint64_t state_count = 0;
  LaurentPoly bracket;
  HLaurent r;      // bracket = r at h = 1
  LaurentPoly phi;  // odd part of r
  LaurentPoly psi;  // even part of r
};

// The loop value -A^2 - A^-2 and the disoriented singular weight -A^4 - A^-4.
const LaurentPoly& loop_value();
const LaurentPoly& singular_disoriented_value();

HLaurent state_contribution(const StateStats& st);

// Maximum A-exponent of the state contribution: 2a + 4b + 2(alpha+||S||) + 4 beta.
std::int64_t max_A(const StateStats& st);

// threads = 0 picks the hardware concurrency.
HLaurent r_poly(const Diagram& d, unsigned threads = 0);

LaurentPoly bracket(const Diagram& d, unsigned threads = 0);

// (phi, psi) with r = phi * h + psi.
std::pair<LaurentPoly, LaurentPoly> split(const Diagram& d, unsigned threads = 0);

// Checks that replacing the singular crossing by a positive plus a negative
// classical crossing leaves the polynomial as a sum of the two, both for the
// bracket and its h-extension. Throws on an unknown or non-singular id.
bool check_singular_identity(const Diagram& d, int singular_crossing_id);

InvariantResult evaluate(const Diagram& d, unsigned threads = 0,
                         std::uint64_t max_states = kDefaultStateBudget);

}  // namespace vsl
