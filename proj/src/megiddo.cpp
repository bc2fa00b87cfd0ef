#include "paracut/megiddo.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "paracut/envelope.hpp"

namespace paracut {

namespace {

// Sign of (target - r): -1 when the target lies left of r, 0 when r is the
// target, +1 when it lies right of r.
using Test = std::function<int(const Rational&)>;

// What is known about the target: it lies in the open interval (a, b), or it
// is exactly `exact`.
class Search {
 public:
  Search(Rational a, Rational b, Test test) : a_(std::move(a)), b_(std::move(b)), test_(test) {}

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const std::optional<Rational>& exact() const { return exact_; }

  // Settles the position of the target relative to r, for r inside (a, b).
  void resolve(const Rational& r) {
    int s = test_(r);
    if (s == 0) {
      exact_ = r;
    } else if (s > 0) {
      a_ = r;
    } else {
      b_ = r;
    }
  }

  // Index of the candidate whose key is largest at the target; ties go to
  // the smallest id (candidates are given in increasing id order).
  std::size_t select(const std::vector<AffineLine>& keys) {
    while (true) {
      if (exact_) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < keys.size(); ++i) {
          if (keys[best].at(*exact_) < keys[i].at(*exact_)) best = i;
        }
        return best;
      }
      std::size_t best = 0;
      for (std::size_t i = 1; i < keys.size(); ++i) {
        if (keys[best].lex_at(a_) < keys[i].lex_at(a_)) best = i;
      }
      // `best` leads right after a; it stays ahead on (a, b) unless some key
      // overtakes it before b.
      const Rational top = keys[best].at(b_);
      bool overtaken = false;
      for (const auto& k : keys) {
        if (top < k.at(b_)) {
          overtaken = true;
          break;
        }
      }
      if (!overtaken) return best;
      narrow_to_upper_piece(keys);
    }
  }

 private:
  // Binary search over the breakpoints of the upper envelope of `keys` on
  // (a, b) until none is left inside, or the target is hit.
  void narrow_to_upper_piece(const std::vector<AffineLine>& keys) {
    std::vector<AffineLine> negated;
    negated.reserve(keys.size());
    for (const auto& k : keys) negated.push_back(k.scaled(Rational(-1)));
    auto pts = lower_envelope(negated, a_, b_).breakpoints();
    std::size_t lo = 0;
    std::size_t hi = pts.size();  // candidate cells: pts[lo-1]..pts[hi]
    while (lo < hi && !exact_) {
      std::size_t mid = lo + (hi - lo) / 2;
      resolve(pts[mid]);
      if (exact_) return;
      if (a_ == pts[mid]) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
  }

  Rational a_;
  Rational b_;
  Test test_;
  std::optional<Rational> exact_;
};

struct PhaseCuts {
  std::vector<Cut> cuts;
  std::vector<AffineLine> lines;
};

// Stoer-Wagner phases with every maximum-adjacency choice made at the target.
PhaseCuts simulate(const RayGraph& ray, Search& search, WorkStats* stats) {
  Multigraph<AffineLine> g = ray.graph;
  const int n = g.original_count();
  PhaseCuts out;
  if (stats) ++stats->sw_runs;
  while (g.live_count() > 1) {
    if (stats) ++stats->ma_orderings;
    std::vector<int> waiting = g.live_vertices();
    std::vector<AffineLine> key(n);
    std::vector<int> order;
    order.reserve(waiting.size());
    auto add = [&](std::size_t pos) {
      int v = waiting[pos];
      waiting.erase(waiting.begin() + static_cast<long>(pos));
      order.push_back(v);
      for (const auto& [t, w] : g.neighbors(v)) key[t] += w;
    };
    add(0);
    std::vector<AffineLine> keys;
    while (!waiting.empty()) {
      keys.clear();
      for (int v : waiting) keys.push_back(key[v]);
      add(search.select(keys));
    }
    const int last = order.back();
    const int prev = order[order.size() - 2];
    out.cuts.push_back(Cut::from_side(n, g.members(last)));
    out.lines.push_back(key[last]);
    g.contract_in_place(prev, last);
  }
  return out;
}

}  // namespace

BreakpointResult megiddo_next_breakpoint(const RayProblem& p, WorkStats* stats) {
  BreakpointResult none;
  none.slope_before = p.slope0;
  const Rational& U = p.lambda_bar;
  if (U.sign() <= 0) return none;
  const AffineLine L = p.initial_line();

  // Target: just right of the breakpoint. Z(r) = L(r) exactly when r does
  // not exceed the breakpoint.
  Test test = [&](const Rational& r) {
    if (U < r) return -1;
    if (stats) ++stats->parametric_tests;
    return min_cut_at(p.ray, r, stats).value == L.at(r) ? +1 : -1;
  };
  Search search(Rational(0), U + Rational(1), test);
  PhaseCuts phases = simulate(p.ray, search, stats);

  std::optional<Rational> first;
  for (const auto& line : phases.lines) {
    auto x = line_intersection(L, line);
    if (x && x->sign() > 0 && *x <= U && (!first || *x < *first)) first = x;
  }
  if (!first) return none;
  BreakpointResult out;
  out.trials = 1;
  if (confirm_breakpoint(p, *first, out, stats)) return out;
  return none;
}

MaxResult megiddo_maximize(const RayGraph& g, const Rational& lo, const Rational& hi,
                           WorkStats* stats) {
  if (!(lo < hi)) throw std::invalid_argument("domain must satisfy lo < hi");
  for (const auto& e : g.graph.original_edges()) {
    if (e.cost.at(lo).sign() < 0 || e.cost.at(hi).sign() < 0) {
      throw DomainError("negative edge cost on the maximization domain");
    }
  }
  MaxResult out;
  auto slope = [&](const Rational& at, int dir) {
    ++out.oracle_calls;
    if (stats) ++stats->oracle_calls;
    return one_sided_slope(g, at, dir, stats);
  };
  auto finish = [&](const Rational& x, const Rational& z) {
    out.lambda_star = x;
    out.mu_star = g.point(x);
    out.z_star = z;
    return out;
  };

  SlopeResult at_lo = slope(lo, +1);
  if (at_lo.slope.sign() <= 0) {
    out.witnesses.push_back(at_lo.witness);
    return finish(lo, at_lo.z);
  }
  SlopeResult at_hi = slope(hi, -1);
  if (at_hi.slope.sign() > 0) {
    out.witnesses.push_back(at_hi.witness);
    return finish(hi, at_hi.z);
  }

  Test test = [&](const Rational& r) {
    if (stats) ++stats->parametric_tests;
    if (slope(r, +1).slope.sign() > 0) return +1;
    return slope(r, -1).slope.sign() > 0 ? 0 : -1;
  };
  Search search(lo, hi, test);
  PhaseCuts phases = simulate(g, search, stats);

  Rational x;
  if (search.exact()) {
    x = *search.exact();
  } else {
    x = lower_envelope(phases.lines, search.a(), search.b()).leftmost_argmax();
  }
  Rational z = phases.lines.front().at(x);
  for (const auto& l : phases.lines) z = min(z, l.at(x));
  for (std::size_t i = 0; i < phases.lines.size(); ++i) {
    if (phases.lines[i].at(x) == z &&
        std::find(out.witnesses.begin(), out.witnesses.end(), phases.cuts[i]) ==
            out.witnesses.end()) {
      out.witnesses.push_back(phases.cuts[i]);
    }
  }
  return finish(x, z);
}

}  // namespace paracut
