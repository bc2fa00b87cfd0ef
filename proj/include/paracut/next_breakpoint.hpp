#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "paracut/envelope.hpp"
#include "paracut/errors.hpp"
#include "paracut/problem.hpp"

namespace paracut {

// Per-iteration record of the deterministic contraction loop.
struct DeterministicTrace {
  struct Iteration {
    int live = 0;           // supervertices before the contraction
    Rational lambda_r;      // point used for the pendant pair
    Rational singleton_min; // min_v c(delta(v)) at lambda_r
    Rational line_value;    // L(lambda_r)
  };
  std::vector<Iteration> iterations;
};

// Deterministic pendant-pair contraction. Each round takes the lower
// envelope of the singleton-cut lines of the current minor, finds where it
// first drops below L, and merges a pendant pair for the costs at that point
// (capped by the running upper bound). The smallest point seen is confirmed
// with a final lexicographic min cut.
BreakpointResult pnb_deterministic(const RayProblem& p, WorkStats* stats = nullptr,
                                   DeterministicTrace* trace = nullptr);

// One randomized contraction run down to two supervertices. Edges are drawn
// with probability proportional to their cost at the point where L meets
// the average singleton-cut line (clamped to lambda_bar). Returns where the
// surviving cut's line crosses L, if that happens at some lambda > 0. The
// surviving cut itself is stored in `survivor` when given.
std::optional<Rational> pnb_random_trial(const RayProblem& p, std::uint64_t seed,
                                         Cut* survivor = nullptr);

struct RandomizedStats {
  std::size_t repetitions = 0;
  std::size_t leaves = 0;
  std::optional<Rational> min_candidate;  // smallest positive candidate seen
};

// Karger-Stein style recursion (contract to ceil(1 + k/sqrt 2), recurse
// twice, brute force below 7 supervertices), repeated until the failure
// probability drops below eta. Repetition i draws from seed + i.
BreakpointResult pnb_randomized(const RayProblem& p, std::uint64_t seed, const Rational& eta,
                                WorkStats* stats = nullptr,
                                RandomizedStats* rstats = nullptr);

// Number of recursion repetitions used for failure probability eta on n
// vertices: ceil(2 * ln(1/eta) * max(1, log2 n)).
std::size_t randomized_repetitions(int n, const Rational& eta);

// Z on [0, lambda_bar], traced by chaining next-breakpoint queries.
PiecewiseLinearConcave ray_envelope(const RayProblem& p, WorkStats* stats = nullptr);

// Z on [lo, hi], restarting the chain wherever the search bound runs out
// before hi. Costs must be nonnegative on [lo, hi].
PiecewiseLinearConcave chained_envelope(const RayGraph& g, const Rational& lo,
                                        const Rational& hi, WorkStats* stats = nullptr);

}  // namespace paracut
