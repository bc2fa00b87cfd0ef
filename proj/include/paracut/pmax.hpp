#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "paracut/problem.hpp"

namespace paracut {

// What the Newton iteration needs from one point: Z there and the supporting
// line on the requested side.
using SideOracle = std::function<SlopeResult(const Rational& at, int dir)>;

// Discrete Newton for the leftmost maximizer of a concave piecewise-linear
// function on [lo, hi]. `oracle_calls` counts evaluated points.
MaxResult newton_maximize(const Rational& lo, const Rational& hi, const SideOracle& side);

// Leftmost maximizer of Z on [lo, hi] along the ray.
MaxResult pmax_newton(const RayGraph& g, const Rational& lo, const Rational& hi,
                      WorkStats* stats = nullptr);

// Next breakpoint as the maximizer of Z(lambda) - (slope0 - 1/2) lambda.
BreakpointResult pnb_via_pmax(const RayProblem& p, WorkStats* stats = nullptr);

enum class ApproxMode { automatic, bruteforce, randomized };

struct ApproxCut {
  Cut cut;
  Rational cost;
};

// Cuts with c_mu(C) <= alpha Z(mu), sorted by canonical side.
std::vector<ApproxCut> approx_cuts(const ParamGraph& g, const std::vector<Rational>& mu,
                                   const Rational& alpha, std::uint64_t seed = 0,
                                   ApproxMode mode = ApproxMode::automatic);

// Same on fixed weights, with the test written squared: c(C)^2 <= alpha_sq Z^2.
// Lets irrational factors such as sqrt(5)/2 be used exactly.
std::vector<ApproxCut> approx_cuts_sq(const Multigraph<Rational>& w, const Rational& alpha_sq,
                                      std::uint64_t seed = 0,
                                      ApproxMode mode = ApproxMode::automatic);

// Number of contraction runs of the randomized mode on n vertices.
std::size_t approx_runs(int n, const Rational& alpha_sq);

struct ScalingLadder {
  Rational eps_sq{5, 4};
  Rational beta;    // (eps^2 - 1) / m
  int p = 0;        // smallest level count with beta eps^(2(p-1)) > m
  std::size_t base_edge = 0;
  // levels[i] = g_i / c(base edge), i = 0..p; g_{p+1} is +infinity.
  std::vector<Rational> levels;
};

ScalingLadder make_ladder(std::size_t m);

struct ScalingTrace {
  bool endpoint = false;     // answered by the endpoint slope checks
  bool exact_hit = false;    // a located crossing was the maximizer itself
  bool restricted = false;   // the vanishing-base-edge restriction was applied
  Rational r1_lo, r1_hi;     // cell of the edge-crossing arrangement
  Rational r1p_lo, r1p_hi;   // after the restriction (equal to r1 otherwise)
  Rational r2_lo, r2_hi;     // cell of the ladder arrangement
  std::size_t ebar = 0;      // index into original_edges()
  ScalingLadder ladder;
  std::size_t h1_candidates = 0;
  std::size_t h2_candidates = 0;
  std::vector<Cut> cuts;     // approximate cuts enumerated at the R2 midpoint
};

// Parametric scaling algorithm for one parameter.
MaxResult pmax_scaling_1d(const RayGraph& g, const Rational& lo, const Rational& hi,
                          WorkStats* stats = nullptr, ScalingTrace* trace = nullptr,
                          std::uint64_t seed = 0);

}  // namespace paracut
