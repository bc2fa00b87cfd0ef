#pragma once

#include <cstdint>

#include "paracut/pgraph.hpp"

namespace paracut {

// Random one-parameter instance. Each edge gets a slope c1 in
// [-slope_range, slope_range] and an intercept c0 = max(0, -c1 * lambda_target)
// + extra with extra in [0, extra_range], so every cost stays nonnegative on
// [0, lambda_target]. Edges are `m` distinct vertex pairs (m is clamped to
// n(n-1)/2).
struct InstanceParams {
  int n = 6;
  int m = 10;
  int slope_range = 5;
  int extra_range = 6;
  long long lambda_target = 4;
  std::uint64_t seed = 0;
};

ParamGraph random_instance(const InstanceParams& params);

// Random fixed-weight graph: `m` distinct pairs with integer weights in
// [0, max_weight]. A random spanning tree is laid down first when `connected`.
Multigraph<Rational> random_weighted_graph(int n, int m, int max_weight, std::uint64_t seed,
                                           bool connected = true);

}  // namespace paracut
