#include "paracut/instance_gen.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace paracut {

namespace {

std::vector<std::pair<int, int>> random_pairs(int n, int m, bool tree, std::mt19937_64& rng) {
  const long long all = static_cast<long long>(n) * (n - 1) / 2;
  m = static_cast<int>(std::min<long long>(m, all));
  std::set<std::pair<int, int>> chosen;
  if (tree) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 1; i < n && static_cast<int>(chosen.size()) < m; ++i) {
      std::uniform_int_distribution<int> pick(0, i - 1);
      auto e = std::minmax(perm[i], perm[pick(rng)]);
      chosen.insert({e.first, e.second});
    }
  }
  if (m * 2LL > all) {
    // Dense: shuffle the full pair list instead of rejection sampling.
    std::vector<std::pair<int, int>> rest;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (!chosen.count({u, v})) rest.push_back({u, v});
      }
    }
    std::shuffle(rest.begin(), rest.end(), rng);
    for (const auto& e : rest) {
      if (static_cast<int>(chosen.size()) >= m) break;
      chosen.insert(e);
    }
  } else {
    std::uniform_int_distribution<int> vertex(0, n - 1);
    while (static_cast<int>(chosen.size()) < m) {
      int u = vertex(rng);
      int v = vertex(rng);
      if (u == v) continue;
      auto e = std::minmax(u, v);
      chosen.insert({e.first, e.second});
    }
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace

ParamGraph random_instance(const InstanceParams& params) {
  if (params.n < 2) throw std::invalid_argument("instance needs two vertices");
  if (params.lambda_target < 0) throw std::invalid_argument("lambda_target must be >= 0");
  std::mt19937_64 rng(params.seed);
  std::uniform_int_distribution<int> slope(-params.slope_range, params.slope_range);
  std::uniform_int_distribution<int> extra(0, params.extra_range);
  std::vector<Multigraph<CostVector>::Edge> edges;
  for (auto [u, v] : random_pairs(params.n, params.m, false, rng)) {
    long long c1 = slope(rng);
    long long c0 = std::max(0LL, -c1 * params.lambda_target) + extra(rng);
    edges.push_back({u, v, CostVector{{BigInt(static_cast<long>(c0)), BigInt(static_cast<long>(c1))}}});
  }
  return ParamGraph(params.n, 1, edges);
}

Multigraph<Rational> random_weighted_graph(int n, int m, int max_weight, std::uint64_t seed,
                                           bool connected) {
  if (n < 2) throw std::invalid_argument("graph needs two vertices");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(0, max_weight);
  std::vector<Multigraph<Rational>::Edge> edges;
  for (auto [u, v] : random_pairs(n, m, connected, rng)) {
    edges.push_back({u, v, Rational(weight(rng))});
  }
  return Multigraph<Rational>(n, edges);
}

}  // namespace paracut
