#pragma once

#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "paracut/errors.hpp"
#include "paracut/pgraph.hpp"

namespace paracut {

// Counters for comparing algorithms by the amount of min-cut machinery they
// invoke. One Stoer-Wagner run on k live supervertices performs k-1
// maximum-adjacency orderings.
struct WorkStats {
  std::size_t ma_orderings = 0;
  std::size_t sw_runs = 0;
  std::size_t oracle_calls = 0;
  std::size_t parametric_tests = 0;
};

template <class W>
struct MAOrdering {
  std::vector<int> order;
  std::pair<int, int> pendant_pair;  // (v_{k-1}, v_k)
  W last_cut_value{};                // weight of the edges at v_k
};

template <class W>
struct MinCut {
  Cut cut;
  W value{};
};

namespace detail {

template <class W>
void require_nonnegative(const Multigraph<W>& g) {
  const W zero{};
  for (int s : g.live_vertices()) {
    for (const auto& [t, w] : g.neighbors(s)) {
      if (w < zero) throw DomainError("negative edge weight");
    }
  }
}

}  // namespace detail

// Maximum-adjacency ordering starting at the smallest live supervertex. Ties
// in connection weight go to the smallest supervertex id. W needs +=, a
// default value acting as zero, and a total order.
template <class W>
MAOrdering<W> ma_ordering(const Multigraph<W>& g, WorkStats* stats = nullptr) {
  if (g.live_count() < 2) throw std::invalid_argument("MA ordering needs two supervertices");
  detail::require_nonnegative(g);
  if (stats) ++stats->ma_orderings;

  struct Entry {
    W key;
    int v;
  };
  auto lower_priority = [](const Entry& a, const Entry& b) {
    if (auto c = a.key <=> b.key; c != 0) return c < 0;
    return a.v > b.v;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(lower_priority)> heap(
      lower_priority);

  const int n = g.original_count();
  std::vector<W> key(n);
  std::vector<char> added(n, 0);
  MAOrdering<W> out;
  out.order.reserve(g.live_count());
  for (int s : g.live_vertices()) heap.push({W{}, s});

  const W zero{};
  while (!heap.empty()) {
    Entry top = heap.top();
    heap.pop();
    if (added[top.v] || top.key != key[top.v]) continue;
    added[top.v] = 1;
    out.order.push_back(top.v);
    for (const auto& [t, w] : g.neighbors(top.v)) {
      if (added[t] || !(zero < w)) continue;
      key[t] += w;
      heap.push({key[t], t});
    }
  }
  const int k = static_cast<int>(out.order.size());
  out.pendant_pair = {out.order[k - 2], out.order[k - 1]};
  out.last_cut_value = key[out.order[k - 1]];
  return out;
}

// Stoer-Wagner global minimum cut. Among cuts of equal weight the one found
// in the earliest phase is kept.
template <class W>
MinCut<W> stoer_wagner(Multigraph<W> g, WorkStats* stats = nullptr) {
  if (g.live_count() < 2) throw std::invalid_argument("min cut needs two supervertices");
  if (stats) ++stats->sw_runs;
  std::optional<MinCut<W>> best;
  while (g.live_count() > 1) {
    auto ord = ma_ordering(g, stats);
    if (!best || ord.last_cut_value < best->value) {
      const auto& m = g.members(ord.pendant_pair.second);
      best = MinCut<W>{Cut::from_side(g.original_count(), m), ord.last_cut_value};
    }
    g.contract_in_place(ord.pendant_pair.first, ord.pendant_pair.second);
  }
  return std::move(*best);
}

// Global minimum cut of the instance at parameter mu.
MinCut<Rational> sw_mincut(const ParamGraph& g, const std::vector<Rational>& mu,
                           WorkStats* stats = nullptr);

// Global minimum cut of a ray instance at lambda.
MinCut<Rational> min_cut_at(const RayGraph& g, const Rational& lambda,
                            WorkStats* stats = nullptr);

struct SlopeResult {
  Rational z;      // Z(at)
  Rational slope;  // one-sided derivative of Z at `at` in direction dir
  Cut witness;     // minimum cut at `at` whose line has that slope
  AffineLine line; // cost line of the witness
};

// Z and its one-sided derivative at `at` (dir = +1 right, -1 left), from one
// Stoer-Wagner run on (value, dir*slope) pairs compared lexicographically.
SlopeResult one_sided_slope(const RayGraph& g, const Rational& at, int dir,
                            WorkStats* stats = nullptr);

// True when every edge cost stays nonnegative on a one-sided neighbourhood
// of `at` (dir = +1 right, -1 left), i.e. one_sided_slope is applicable.
bool admissible_side(const RayGraph& g, const Rational& at, int dir);

}  // namespace paracut
