// Independent evaluation route for the bracket: expand one unresolved
// classical or singular crossing per step with its two-term weights, and
// evaluate each fully resolved leaf by counting closed curves (every closed
// component is worth -A^2 - A^-2). Shares no traversal or bookkeeping code
// with the state-sum evaluator; leaf components are counted with a
// union-find over ports instead of a cycle walk.

#pragma once

#include "vsl/diagram.hpp"
#include "vsl/laurent.hpp"

namespace vsl {

LaurentPoly bracket_skein(const Diagram& d);

}  // namespace vsl
