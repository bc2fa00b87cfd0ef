#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "paracut/pgraph.hpp"

namespace paracut {

// Contractible minor kept as two dense cost matrices (intercepts and slopes
// of the edge lines) plus their row sums. Merging two supervertices costs
// O(k) on k live supervertices.
class DenseMinor {
 public:
  explicit DenseMinor(const RayGraph& g);
  // Fixed (non-parametric) weights: every slope is zero.
  explicit DenseMinor(const Multigraph<Rational>& g);

  int size() const { return static_cast<int>(members_.size()); }
  int original_count() const { return n_; }
  const std::vector<int>& members(int i) const { return members_[i]; }

  AffineLine edge(int i, int j) const { return {gamma0_[i][j], gamma1_[i][j]}; }
  AffineLine degree(int i) const { return {deg0_[i], deg1_[i]}; }
  // Sum of the singleton-cut lines.
  AffineLine degree_sum() const;

  // Merges j into i and drops the self-loop.
  void merge(int i, int j);

  // Draws an edge {i, j} with probability proportional to its cost at
  // lambda. When all costs vanish, an edge with a nonzero line is drawn
  // uniformly, or any pair if there is none.
  std::pair<int, int> sample_edge(const Rational& lambda, gmp_randclass& rng) const;

  // Side of the cut given by a subset of the live indices.
  Cut cut_of(std::span<const int> indices) const;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> members_;
  std::vector<std::vector<Rational>> gamma0_;
  std::vector<std::vector<Rational>> gamma1_;
  std::vector<Rational> deg0_;
  std::vector<Rational> deg1_;
};

// Index drawn with probability weights[i] / sum(weights), exactly. Weights
// must be nonnegative with a positive sum.
std::size_t sample_proportional(std::span<const Rational> weights, gmp_randclass& rng);

// Seeds a gmp_randinit_mt generator from a 64-bit seed.
void seed_rng(gmp_randclass& rng, std::uint64_t seed);

}  // namespace paracut
