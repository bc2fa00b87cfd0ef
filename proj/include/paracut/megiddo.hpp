#pragma once

#include "paracut/problem.hpp"

namespace paracut {

// Stoer-Wagner run symbolically on affine connection weights, with every
// comparison settled at the unknown target by an oracle test at the root of
// the difference. The n-1 phase cuts then describe Z around the target.
//
// Next breakpoint: a test at r asks whether Z(r) = L(r).
BreakpointResult megiddo_next_breakpoint(const RayProblem& p, WorkStats* stats = nullptr);

// Leftmost maximizer on [lo, hi]: a test at r reads the one-sided slopes.
MaxResult megiddo_maximize(const RayGraph& g, const Rational& lo, const Rational& hi,
                           WorkStats* stats = nullptr);

}  // namespace paracut
