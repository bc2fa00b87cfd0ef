#pragma once

#include <optional>
#include <vector>

#include "paracut/mincut_sw.hpp"
#include "paracut/pgraph.hpp"

namespace paracut {

// Next-breakpoint query along a ray. `lambda_bar` is the search bound
// actually used: the a priori bound sum_e |cbar0(e)|, lowered to the caller's
// domain cap and to the last lambda at which every edge cost is still
// nonnegative. Breakpoints are looked for in (0, lambda_bar].
struct RayProblem {
  RayGraph ray;
  Rational lambda_bar;
  Rational z0;      // Z at lambda = 0
  Rational slope0;  // right derivative of Z at lambda = 0
  std::optional<Rational> domain_hi;

  // L(lambda) = z0 + slope0 * lambda.
  AffineLine initial_line() const { return {z0, slope0}; }
};

struct BreakpointResult {
  bool found = false;
  Rational lambda_nb;
  std::vector<Rational> mu_nb;
  Cut witness;  // cut defining the slope right after the breakpoint
  Rational slope_before;
  Rational slope_after;
  std::size_t trials = 0;
};

struct MaxResult {
  Rational lambda_star;
  std::vector<Rational> mu_star;
  Rational z_star;
  std::vector<Cut> witnesses;
  std::size_t oracle_calls = 0;
};

// sum_e |cbar0(e)|.
Rational lambda_bar(const RayGraph& g);

// Largest lambda >= 0 with every edge cost nonnegative on [0, lambda]; empty
// when no edge cost decreases along the ray. Throws DomainError when some
// cost is already negative at lambda = 0.
std::optional<Rational> nonnegativity_limit(const RayGraph& g);

// Builds the problem bundle, computing Z(0) and its right slope with one
// lexicographic Stoer-Wagner run.
RayProblem make_ray_problem(RayGraph ray, std::optional<Rational> domain_hi = std::nullopt,
                            WorkStats* stats = nullptr);

// Decides whether Z leaves the line L right after lambda, i.e. whether
// lambda is the next breakpoint given that Z = L on [0, lambda]. On success
// fills `result` with the slope-defining cut.
bool confirm_breakpoint(const RayProblem& p, const Rational& lambda,
                        BreakpointResult& result, WorkStats* stats = nullptr);

}  // namespace paracut
