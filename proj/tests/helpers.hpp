#pragma once

#include <random>
#include <vector>

#include "paracut/instance_gen.hpp"
#include "paracut/next_breakpoint.hpp"
#include "paracut/pgraph.hpp"

namespace testing {

using namespace paracut;

inline Rational R(long long p, long long q = 1) { return Rational(BigInt(static_cast<long>(p)), BigInt(static_cast<long>(q))); }

inline RayGraph lines(int n, std::vector<std::tuple<int, int, long long, long long>> es) {
  std::vector<Multigraph<AffineLine>::Edge> edges;
  for (auto [u, v, c0, c1] : es) edges.push_back({u - 1, v - 1, AffineLine{R(c0), R(c1)}});
  return ray_from_lines(n, edges);
}

// 1-2: lambda, 2-3: 1, 1-3: 2 - lambda.
inline RayGraph t1() { return lines(3, {{1, 2, 0, 1}, {2, 3, 1, 0}, {1, 3, 2, -1}}); }
// 1-2: 1 + 2 lambda, 2-3: 3.
inline RayGraph p3() { return lines(3, {{1, 2, 1, 2}, {2, 3, 3, 0}}); }
// Single edge 1 + lambda.
inline RayGraph k2() { return lines(2, {{1, 2, 1, 1}}); }

inline Multigraph<Rational> weighted(int n, std::vector<std::tuple<int, int, long long>> es) {
  std::vector<Multigraph<Rational>::Edge> edges;
  for (auto [u, v, w] : es) edges.push_back({u - 1, v - 1, R(w)});
  return Multigraph<Rational>(n, edges);
}

// The random corpus shared by the equivalence checks: n in [4, 9], any edge
// count from n - 1 up to a complete graph, costs nonnegative on [0, 4].
struct CorpusInstance {
  ParamGraph graph;
  RayGraph ray;
  Rational hi;
};

inline CorpusInstance corpus_instance(std::uint64_t seed, int n_lo = 4, int n_hi = 9) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 17);
  InstanceParams p;
  p.n = std::uniform_int_distribution<int>(n_lo, n_hi)(rng);
  p.m = std::uniform_int_distribution<int>(p.n - 1, p.n * (p.n - 1) / 2)(rng);
  p.lambda_target = 4;
  p.seed = seed;
  CorpusInstance out{random_instance(p), {}, R(p.lambda_target)};
  out.ray = restrict_to_ray(out.graph, {R(0)}, {BigInt(1)});
  return out;
}

inline Rational random_rational(std::mt19937_64& rng, long long lo, long long hi,
                                long long den_max = 97) {
  std::uniform_int_distribution<long long> den(1, den_max);
  long long q = den(rng);
  std::uniform_int_distribution<long long> num(lo * q, hi * q);
  return R(num(rng), q);
}

}  // namespace testing
