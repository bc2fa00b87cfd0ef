#include "paracut/dense_minor.hpp"

#include <stdexcept>

namespace paracut {

namespace {

template <class Cost, class F>
void fill_from(const Multigraph<Cost>& g, F split, int& n, std::vector<std::vector<int>>& members,
               std::vector<std::vector<Rational>>& gamma0,
               std::vector<std::vector<Rational>>& gamma1, std::vector<Rational>& deg0,
               std::vector<Rational>& deg1) {
  n = g.original_count();
  auto live = g.live_vertices();
  const std::size_t k = live.size();
  std::vector<int> index(n, -1);
  for (std::size_t i = 0; i < k; ++i) index[live[i]] = static_cast<int>(i);
  members.clear();
  for (int s : live) members.push_back(g.members(s));
  gamma0.assign(k, std::vector<Rational>(k));
  gamma1.assign(k, std::vector<Rational>(k));
  deg0.assign(k, Rational(0));
  deg1.assign(k, Rational(0));
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& [t, c] : g.neighbors(live[i])) {
      auto [c0, c1] = split(c);
      int j = index[t];
      gamma0[i][j] = c0;
      gamma1[i][j] = c1;
      deg0[i] += c0;
      deg1[i] += c1;
    }
  }
}

}  // namespace

DenseMinor::DenseMinor(const RayGraph& g) {
  fill_from(
      g.graph, [](const AffineLine& l) { return std::pair{l.intercept, l.slope}; }, n_, members_,
      gamma0_, gamma1_, deg0_, deg1_);
}

DenseMinor::DenseMinor(const Multigraph<Rational>& g) {
  fill_from(
      g, [](const Rational& w) { return std::pair{w, Rational(0)}; }, n_, members_, gamma0_,
      gamma1_, deg0_, deg1_);
}

AffineLine DenseMinor::degree_sum() const {
  AffineLine total;
  for (std::size_t i = 0; i < deg0_.size(); ++i) total += {deg0_[i], deg1_[i]};
  return total;
}

void DenseMinor::merge(int i, int j) {
  const int k = size();
  if (i == j || i < 0 || j < 0 || i >= k || j >= k) {
    throw std::invalid_argument("invalid dense merge");
  }
  deg0_[i] += deg0_[j] - Rational(2) * gamma0_[i][j];
  deg1_[i] += deg1_[j] - Rational(2) * gamma1_[i][j];
  for (int t = 0; t < k; ++t) {
    if (t == i || t == j) continue;
    gamma0_[i][t] += gamma0_[j][t];
    gamma1_[i][t] += gamma1_[j][t];
    gamma0_[t][i] = gamma0_[i][t];
    gamma1_[t][i] = gamma1_[i][t];
  }
  gamma0_[i][j] = gamma0_[j][i] = Rational(0);
  gamma1_[i][j] = gamma1_[j][i] = Rational(0);
  members_[i].insert(members_[i].end(), members_[j].begin(), members_[j].end());

  // Move the last index into slot j.
  const int last = k - 1;
  if (j != last) {
    members_[j] = std::move(members_[last]);
    deg0_[j] = std::move(deg0_[last]);
    deg1_[j] = std::move(deg1_[last]);
    std::swap(gamma0_[j], gamma0_[last]);
    std::swap(gamma1_[j], gamma1_[last]);
    for (int t = 0; t < last; ++t) {
      gamma0_[t][j] = gamma0_[t][last];
      gamma1_[t][j] = gamma1_[t][last];
    }
    gamma0_[j][j] = Rational(0);
    gamma1_[j][j] = Rational(0);
  }
  members_.pop_back();
  deg0_.pop_back();
  deg1_.pop_back();
  gamma0_.pop_back();
  gamma1_.pop_back();
  for (int t = 0; t < last; ++t) {
    gamma0_[t].pop_back();
    gamma1_[t].pop_back();
  }
}

std::pair<int, int> DenseMinor::sample_edge(const Rational& lambda, gmp_randclass& rng) const {
  const int k = size();
  if (k < 2) throw std::invalid_argument("sampling an edge needs two supervertices");
  std::vector<Rational> deg(k);
  bool any_positive = false;
  for (int i = 0; i < k; ++i) {
    deg[i] = deg0_[i] + lambda * deg1_[i];
    if (deg[i].sign() < 0) throw std::domain_error("negative degree while sampling");
    if (deg[i].sign() > 0) any_positive = true;
  }
  if (any_positive) {
    int i = static_cast<int>(sample_proportional(deg, rng));
    std::vector<Rational> row(k);
    for (int j = 0; j < k; ++j) row[j] = gamma0_[i][j] + lambda * gamma1_[i][j];
    int j = static_cast<int>(sample_proportional(row, rng));
    return {std::min(i, j), std::max(i, j)};
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (!gamma0_[i][j].is_zero() || !gamma1_[i][j].is_zero()) pairs.push_back({i, j});
    }
  }
  if (pairs.empty()) {
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) pairs.push_back({i, j});
    }
  }
  mpz_class pick = rng.get_z_range(mpz_class(static_cast<unsigned long>(pairs.size())));
  return pairs[pick.get_ui()];
}

Cut DenseMinor::cut_of(std::span<const int> indices) const {
  std::vector<int> side;
  for (int i : indices) side.insert(side.end(), members_[i].begin(), members_[i].end());
  return Cut::from_side(n_, std::move(side));
}

std::size_t sample_proportional(std::span<const Rational> weights, gmp_randclass& rng) {
  mpz_class common = 1;
  for (const auto& w : weights) {
    if (w.sign() < 0) throw std::invalid_argument("negative sampling weight");
    mpz_class den = w.denominator();
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<mpz_class> scaled;
  scaled.reserve(weights.size());
  mpz_class total = 0;
  for (const auto& w : weights) {
    mpz_class v = w.numerator() * (common / w.denominator());
    total += v;
    scaled.push_back(std::move(v));
  }
  if (total == 0) throw std::invalid_argument("sampling weights sum to zero");
  mpz_class r = rng.get_z_range(total);
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    if (r < scaled[i]) return i;
    r -= scaled[i];
  }
  return scaled.size() - 1;
}

void seed_rng(gmp_randclass& rng, std::uint64_t seed) {
  mpz_class s;
  mpz_import(s.get_mpz_t(), 1, 1, sizeof(seed), 0, 0, &seed);
  rng.seed(s);
}

}  // namespace paracut
