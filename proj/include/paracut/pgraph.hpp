#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "paracut/numeric.hpp"

namespace paracut {

// Integer cost coefficients (c^0, c^1, ..., c^d) of one edge.
struct CostVector {
  std::vector<BigInt> coeffs;

  CostVector& operator+=(const CostVector& o) {
    if (coeffs.size() < o.coeffs.size()) coeffs.resize(o.coeffs.size());
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
  }
  friend bool operator==(const CostVector&, const CostVector&) = default;
};

// Undirected multigraph over supervertices. Supervertex ids are original
// vertex ids (0-based); after merging u and v the smaller id survives.
// Parallel edges are kept merged with summed costs, self-loops are dropped.
// The edge list the graph was built from is retained so cut costs can always
// be evaluated on the original vertex set.
template <class Cost>
class Multigraph {
 public:
  struct Edge {
    int u;
    int v;
    Cost cost;
  };

  Multigraph() = default;

  Multigraph(int n, const std::vector<Edge>& edges) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    owner_.resize(n);
    members_.resize(n);
    live_.assign(n, 1);
    adj_.resize(n);
    live_count_ = n;
    for (int v = 0; v < n; ++v) {
      owner_[v] = v;
      members_[v] = {v};
    }
    std::map<std::pair<int, int>, Cost> merged;
    for (const Edge& e : edges) {
      if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
        throw std::out_of_range("edge endpoint out of range");
      }
      if (e.u == e.v) throw std::invalid_argument("self-loop");
      auto key = std::minmax(e.u, e.v);
      merged[{key.first, key.second}] += e.cost;
    }
    auto originals = std::make_shared<std::vector<Edge>>();
    originals->reserve(merged.size());
    for (auto& [key, cost] : merged) {
      originals->push_back({key.first, key.second, cost});
      adj_[key.first][key.second] = cost;
      adj_[key.second][key.first] = cost;
    }
    originals_ = std::move(originals);
  }

  int original_count() const { return n_; }
  int live_count() const { return live_count_; }
  bool is_live(int s) const { return s >= 0 && s < n_ && live_[s]; }
  int supervertex_of(int v) const { return owner_.at(v); }
  const std::vector<int>& members(int s) const { return members_.at(s); }
  const std::map<int, Cost>& neighbors(int s) const { return adj_.at(s); }
  const std::vector<Edge>& original_edges() const { return *originals_; }

  std::vector<int> live_vertices() const {
    std::vector<int> out;
    out.reserve(live_count_);
    for (int s = 0; s < n_; ++s) {
      if (live_[s]) out.push_back(s);
    }
    return out;
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (int s = 0; s < n_; ++s) {
      if (live_[s]) twice += adj_[s].size();
    }
    return twice / 2;
  }

  // Total cost of the edges incident to supervertex s.
  Cost degree(int s) const {
    Cost total{};
    for (const auto& [w, c] : adj_.at(s)) total += c;
    return total;
  }

  // Merges v into u (or u into v; the smaller id survives). Returns the
  // surviving id.
  int contract_in_place(int u, int v) {
    if (u == v) throw std::invalid_argument("cannot contract a vertex with itself");
    if (!is_live(u) || !is_live(v)) {
      throw std::invalid_argument("contraction of a dead supervertex");
    }
    if (v < u) std::swap(u, v);
    auto absorbed = std::move(adj_[v]);
    adj_[v].clear();
    for (auto& [w, c] : absorbed) {
      adj_[w].erase(v);
      if (w == u) continue;
      adj_[u][w] += c;
      adj_[w][u] += c;
    }
    adj_[u].erase(v);
    for (int x : members_[v]) owner_[x] = u;
    members_[u].insert(members_[u].end(), members_[v].begin(),
                       members_[v].end());
    members_[v].clear();
    live_[v] = 0;
    --live_count_;
    return u;
  }

  // Applies f to every edge cost, keeping the contraction state.
  template <class F>
  auto map_costs(F f) const -> Multigraph<decltype(f(std::declval<Cost>()))> {
    using Out = decltype(f(std::declval<Cost>()));
    Multigraph<Out> out;
    out.n_ = n_;
    out.owner_ = owner_;
    out.members_ = members_;
    out.live_ = live_;
    out.live_count_ = live_count_;
    out.adj_.resize(n_);
    for (int s = 0; s < n_; ++s) {
      for (const auto& [w, c] : adj_[s]) out.adj_[s].emplace(w, f(c));
    }
    auto originals = std::make_shared<std::vector<typename Multigraph<Out>::Edge>>();
    originals->reserve(originals_->size());
    for (const Edge& e : *originals_) originals->push_back({e.u, e.v, f(e.cost)});
    out.originals_ = std::move(originals);
    return out;
  }

 private:
  template <class>
  friend class Multigraph;

  int n_ = 0;
  std::vector<int> owner_;
  std::vector<std::vector<int>> members_;
  std::vector<char> live_;
  int live_count_ = 0;
  std::vector<std::map<int, Cost>> adj_;
  std::shared_ptr<const std::vector<Edge>> originals_ =
      std::make_shared<std::vector<Edge>>();
};

// Functional contraction: returns a copy with u and v merged.
template <class Cost>
Multigraph<Cost> contract(const Multigraph<Cost>& g, int u, int v) {
  Multigraph<Cost> out = g;
  out.contract_in_place(u, v);
  return out;
}

// Parametric instance: every edge carries (c^0, ..., c^d).
struct ParamGraph {
  int d = 0;
  Multigraph<CostVector> graph;

  ParamGraph() = default;
  ParamGraph(int n, int dim, const std::vector<Multigraph<CostVector>::Edge>& edges);

  int vertex_count() const { return graph.original_count(); }
  std::size_t edge_count() const { return graph.original_edges().size(); }

  // Edge costs c_mu(e) = c^0(e) + sum_i mu_i c^i(e).
  Multigraph<Rational> costs_at(const std::vector<Rational>& mu) const;
};

// The instance restricted to the ray mu0 + lambda * nu: each edge cost is
// the affine line cbar0(e) + lambda * cbar1(e).
struct RayGraph {
  Multigraph<AffineLine> graph;
  std::vector<Rational> mu0;
  std::vector<BigInt> nu;

  int vertex_count() const { return graph.original_count(); }
  std::size_t edge_count() const { return graph.original_edges().size(); }

  Multigraph<Rational> costs_at(const Rational& lambda) const;
  Multigraph<LexValue> lex_costs_at(const Rational& lambda, int dir) const;

  // mu0 + lambda * nu.
  std::vector<Rational> point(const Rational& lambda) const;

  // Same ray with origin moved to lambda = origin.
  RayGraph shifted(const Rational& origin) const;
};

RayGraph restrict_to_ray(const ParamGraph& g, const std::vector<Rational>& mu0,
                         const std::vector<BigInt>& nu);

// A d = 1 instance already written as lines, with mu0 = 0 and nu = 1.
RayGraph ray_from_lines(int n, const std::vector<Multigraph<AffineLine>::Edge>& edges);

// Nonempty proper subset of the original vertices. Stored canonically: the
// side never contains vertex 0.
class Cut {
 public:
  Cut() = default;
  // side: 0-based vertex ids. Throws on empty or full sides.
  static Cut from_side(int n, std::vector<int> side);
  // Bit i of mask = vertex i in side; n <= 63.
  static Cut from_mask(int n, std::uint64_t mask);

  int vertex_count() const { return n_; }
  const std::vector<int>& side() const { return side_; }
  std::vector<int> one_based() const;
  std::uint64_t mask() const;
  std::vector<char> membership() const;

  friend bool operator==(const Cut&, const Cut&) = default;
  friend auto operator<=>(const Cut&, const Cut&) = default;

 private:
  int n_ = 0;
  std::vector<int> side_;
};

std::string to_string(const Cut& c);

// Total cost of the original edges crossing the cut.
template <class Cost>
Cost cut_cost(const Multigraph<Cost>& g, const Cut& c) {
  if (c.vertex_count() != g.original_count()) {
    throw std::invalid_argument("cut and graph disagree on vertex count");
  }
  auto in = c.membership();
  Cost total{};
  for (const auto& e : g.original_edges()) {
    if (in[e.u] != in[e.v]) total += e.cost;
  }
  return total;
}

inline AffineLine cut_cost(const RayGraph& g, const Cut& c) {
  return cut_cost(g.graph, c);
}

// Maps a set of live supervertices back to a cut of the original vertices.
template <class Cost>
Cut expand_cut(const Multigraph<Cost>& g, std::span<const int> supervertices) {
  std::vector<int> side;
  for (int s : supervertices) {
    if (!g.is_live(s)) throw std::invalid_argument("dead supervertex in cut");
    const auto& m = g.members(s);
    side.insert(side.end(), m.begin(), m.end());
  }
  return Cut::from_side(g.original_count(), std::move(side));
}

}  // namespace paracut
