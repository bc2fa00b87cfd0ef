#include "paracut/pgraph.hpp"

#include <algorithm>

namespace paracut {

ParamGraph::ParamGraph(int n, int dim,
                       const std::vector<Multigraph<CostVector>::Edge>& edges)
    : d(dim) {
  if (dim < 0) throw std::invalid_argument("negative parameter dimension");
  for (const auto& e : edges) {
    if (e.cost.coeffs.size() != static_cast<std::size_t>(dim) + 1) {
      throw std::invalid_argument("edge cost vector length differs from d+1");
    }
  }
  graph = Multigraph<CostVector>(n, edges);
}

Multigraph<Rational> ParamGraph::costs_at(const std::vector<Rational>& mu) const {
  if (mu.size() != static_cast<std::size_t>(d)) {
    throw std::invalid_argument("parameter has wrong dimension");
  }
  return graph.map_costs([&](const CostVector& c) {
    Rational v(c.coeffs.at(0));
    for (int i = 0; i < d; ++i) v += mu[i] * Rational(c.coeffs.at(i + 1));
    return v;
  });
}

Multigraph<Rational> RayGraph::costs_at(const Rational& lambda) const {
  return graph.map_costs([&](const AffineLine& l) { return l.at(lambda); });
}

Multigraph<LexValue> RayGraph::lex_costs_at(const Rational& lambda, int dir) const {
  return graph.map_costs([&](const AffineLine& l) { return l.lex_at(lambda, dir); });
}

std::vector<Rational> RayGraph::point(const Rational& lambda) const {
  std::vector<Rational> out = mu0;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += lambda * Rational(nu[i]);
  return out;
}

RayGraph RayGraph::shifted(const Rational& origin) const {
  RayGraph out;
  out.graph = graph.map_costs([&](const AffineLine& l) { return l.shifted(origin); });
  out.mu0 = point(origin);
  out.nu = nu;
  return out;
}

RayGraph restrict_to_ray(const ParamGraph& g, const std::vector<Rational>& mu0,
                         const std::vector<BigInt>& nu) {
  if (mu0.size() != static_cast<std::size_t>(g.d) ||
      nu.size() != static_cast<std::size_t>(g.d)) {
    throw std::invalid_argument("ray dimension differs from instance dimension");
  }
  RayGraph out;
  out.mu0 = mu0;
  out.nu = nu;
  out.graph = g.graph.map_costs([&](const CostVector& c) {
    AffineLine line{Rational(c.coeffs.at(0)), Rational(0)};
    BigInt slope = 0;
    for (int i = 0; i < g.d; ++i) {
      line.intercept += mu0[i] * Rational(c.coeffs.at(i + 1));
      slope += nu[i] * c.coeffs.at(i + 1);
    }
    line.slope = Rational(slope);
    return line;
  });
  return out;
}

RayGraph ray_from_lines(int n, const std::vector<Multigraph<AffineLine>::Edge>& edges) {
  RayGraph out;
  out.graph = Multigraph<AffineLine>(n, edges);
  out.mu0 = {Rational(0)};
  out.nu = {BigInt(1)};
  return out;
}

Cut Cut::from_side(int n, std::vector<int> side) {
  std::sort(side.begin(), side.end());
  side.erase(std::unique(side.begin(), side.end()), side.end());
  for (int v : side) {
    if (v < 0 || v >= n) throw std::out_of_range("cut vertex out of range");
  }
  if (side.empty() || static_cast<int>(side.size()) == n) {
    throw std::invalid_argument("cut side must be a nonempty proper subset");
  }
  if (side.front() == 0) {
    std::vector<int> complement;
    complement.reserve(n - side.size());
    std::size_t j = 0;
    for (int v = 0; v < n; ++v) {
      if (j < side.size() && side[j] == v) {
        ++j;
      } else {
        complement.push_back(v);
      }
    }
    side = std::move(complement);
  }
  Cut c;
  c.n_ = n;
  c.side_ = std::move(side);
  return c;
}

Cut Cut::from_mask(int n, std::uint64_t mask) {
  if (n > 63) throw std::invalid_argument("mask form limited to 63 vertices");
  std::vector<int> side;
  for (int v = 0; v < n; ++v) {
    if (mask >> v & 1U) side.push_back(v);
  }
  return from_side(n, std::move(side));
}

std::vector<int> Cut::one_based() const {
  std::vector<int> out = side_;
  for (int& v : out) ++v;
  return out;
}

std::uint64_t Cut::mask() const {
  std::uint64_t m = 0;
  for (int v : side_) m |= std::uint64_t{1} << v;
  return m;
}

std::vector<char> Cut::membership() const {
  std::vector<char> in(n_, 0);
  for (int v : side_) in[v] = 1;
  return in;
}

std::string to_string(const Cut& c) {
  std::string out = "{";
  auto vs = c.one_based();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vs[i]);
  }
  return out + "}";
}

}  // namespace paracut
