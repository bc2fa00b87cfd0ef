#pragma once

#include <cstdint>
#include <vector>

#include "paracut/envelope.hpp"
#include "paracut/errors.hpp"
#include "paracut/problem.hpp"

namespace paracut {

// Largest n the brute-force routines accept: 16, or PARACUT_ORACLE_MAX_N.
int oracle_max_n();
// Throws ResourceError when n exceeds oracle_max_n().
void require_oracle_size(int n);

// Calls f(cut, cost) for every canonical cut, in increasing mask order.
// The cost is accumulated from the original edges.
template <class Cost, class F>
void enumerate_cuts(const Multigraph<Cost>& g, F f) {
  const int n = g.original_count();
  require_oracle_size(n);
  if (n < 2) return;
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  const auto& edges = g.original_edges();
  for (std::uint64_t half = 1; half < count; ++half) {
    std::uint64_t mask = half << 1;  // vertex 0 is never on the canonical side
    Cost total{};
    for (const auto& e : edges) {
      if (((mask >> e.u) ^ (mask >> e.v)) & 1U) total += e.cost;
    }
    f(Cut::from_mask(n, mask), total);
  }
}

struct CutCatalog {
  std::vector<Cut> cuts;
  std::vector<AffineLine> lines;
};

CutCatalog cut_catalog(const RayGraph& g);

// Z restricted to the ray on [lo, hi], from all cuts.
PiecewiseLinearConcave oracle_envelope(const RayGraph& g, const Rational& lo,
                                       const Rational& hi);

// First breakpoint in (0, lambda_bar]; a breakpoint at lambda_bar itself
// counts when the costs stay nonnegative just beyond it.
BreakpointResult oracle_pnb(const RayProblem& p);

// Leftmost maximizer on [lo, hi] together with every cut attaining Z there.
MaxResult oracle_pmax(const RayGraph& g, const Rational& lo, const Rational& hi);

// Minimum cut by enumeration; ties go to the smallest mask.
MinCut<Rational> oracle_min_cut(const Multigraph<Rational>& g);

// Cheapest cut separating original vertices s and t.
Rational oracle_min_separating(const Multigraph<Rational>& g, int s, int t);

}  // namespace paracut
