#include "paracut/pmax.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "paracut/dense_minor.hpp"
#include "paracut/oracle.hpp"

namespace paracut {

namespace {

void check_domain(const RayGraph& g, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("domain must satisfy lo < hi");
  for (const auto& e : g.graph.original_edges()) {
    if (e.cost.at(lo).sign() < 0 || e.cost.at(hi).sign() < 0) {
      throw DomainError("negative edge cost on the maximization domain");
    }
  }
}

void add_witness(std::vector<Cut>& out, const Cut& c) {
  if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
}

}  // namespace

MaxResult newton_maximize(const Rational& lo, const Rational& hi, const SideOracle& side) {
  MaxResult out;
  auto finish = [&](const Rational& x, const Rational& z) {
    out.lambda_star = x;
    out.z_star = z;
    return out;
  };

  SlopeResult first = side(lo, +1);
  out.oracle_calls = 1;
  if (first.slope.sign() <= 0) {
    add_witness(out.witnesses, first.witness);
    return finish(lo, first.z);
  }
  SlopeResult last = side(hi, -1);
  ++out.oracle_calls;
  if (last.slope.sign() > 0) {
    add_witness(out.witnesses, last.witness);
    return finish(hi, last.z);
  }

  AffineLine rising = first.line;   // supports Z from the left of the maximum
  AffineLine falling = last.line;   // supports Z from the right
  while (true) {
    Rational x = *line_intersection(rising, falling);
    SlopeResult right = side(x, +1);
    ++out.oracle_calls;
    if (right.z == rising.at(x)) {
      add_witness(out.witnesses, right.witness);
      return finish(x, right.z);
    }
    if (right.slope.sign() > 0) {
      rising = right.line;
      continue;
    }
    SlopeResult left = side(x, -1);
    if (left.slope.sign() <= 0) {
      falling = left.line;
      continue;
    }
    add_witness(out.witnesses, left.witness);
    add_witness(out.witnesses, right.witness);
    return finish(x, right.z);
  }
}

MaxResult pmax_newton(const RayGraph& g, const Rational& lo, const Rational& hi,
                      WorkStats* stats) {
  check_domain(g, lo, hi);
  auto side = [&](const Rational& at, int dir) {
    if (stats) ++stats->oracle_calls;
    return one_sided_slope(g, at, dir, stats);
  };
  MaxResult out = newton_maximize(lo, hi, side);
  out.mu_star = g.point(out.lambda_star);
  return out;
}

BreakpointResult pnb_via_pmax(const RayProblem& p, WorkStats* stats) {
  BreakpointResult none;
  none.slope_before = p.slope0;
  const Rational& U = p.lambda_bar;
  if (U.sign() <= 0) return none;

  // Z - delta*lambda rises with slope 1/2 up to the breakpoint and falls
  // after it, since cut slopes are integers.
  const Rational delta = p.slope0 - Rational(1, 2);
  auto side = [&](const Rational& at, int dir) {
    if (stats) ++stats->oracle_calls;
    SlopeResult s = one_sided_slope(p.ray, at, dir, stats);
    s.z -= delta * at;
    s.slope -= delta;
    s.line.slope -= delta;
    return s;
  };
  MaxResult m = newton_maximize(Rational(0), U, side);
  BreakpointResult out;
  out.trials = m.oracle_calls;
  if (confirm_breakpoint(p, m.lambda_star, out, stats)) return out;
  none.trials = m.oracle_calls;
  return none;
}

// ---------------------------------------------------------------------------
// approximate cuts

namespace {

// ceil(2 alpha), at least 2.
int contraction_target(const Rational& alpha_sq) {
  int k = 2;
  while (Rational(k * k) < Rational(4) * alpha_sq) ++k;
  return k;
}

bool passes(const Rational& cost, const Rational& z, const Rational& alpha_sq) {
  return cost * cost <= alpha_sq * z * z;
}

}  // namespace

std::size_t approx_runs(int n, const Rational& alpha_sq) {
  const int k = contraction_target(alpha_sq);
  if (n <= k) return 1;
  double runs = 3.0 * std::pow(static_cast<double>(n), k) * std::log(static_cast<double>(n));
  return static_cast<std::size_t>(std::ceil(runs));
}

std::vector<ApproxCut> approx_cuts_sq(const Multigraph<Rational>& w, const Rational& alpha_sq,
                                      std::uint64_t seed, ApproxMode mode) {
  if (alpha_sq < Rational(1)) throw std::invalid_argument("alpha must be at least 1");
  detail::require_nonnegative(w);
  const int n = w.original_count();
  if (n < 2) throw std::invalid_argument("cuts need two vertices");
  if (mode == ApproxMode::automatic) {
    mode = n <= oracle_max_n() ? ApproxMode::bruteforce : ApproxMode::randomized;
  }

  std::vector<ApproxCut> out;
  if (mode == ApproxMode::bruteforce) {
    std::vector<ApproxCut> all;
    enumerate_cuts(w, [&](Cut c, const Rational& cost) { all.push_back({std::move(c), cost}); });
    Rational z = all.front().cost;
    for (const auto& a : all) z = min(z, a.cost);
    for (auto& a : all) {
      if (passes(a.cost, z, alpha_sq)) out.push_back(std::move(a));
    }
  } else {
    const Rational z = stoer_wagner(w).value;
    const int k = contraction_target(alpha_sq);
    const std::size_t runs = approx_runs(n, alpha_sq);
    std::map<Cut, Rational> found;
    const DenseMinor start(w);
    for (std::size_t r = 0; r < runs; ++r) {
      gmp_randclass rng(gmp_randinit_mt);
      seed_rng(rng, seed + r);
      DenseMinor m = start;
      while (m.size() > k) {
        auto [i, j] = m.sample_edge(Rational(0), rng);
        m.merge(i, j);
      }
      const int s = m.size();
      for (std::uint32_t mask = 1; mask < (1U << (s - 1)); ++mask) {
        std::vector<int> side;
        for (int i = 1; i < s; ++i) {
          if (mask >> (i - 1) & 1U) side.push_back(i);
        }
        Rational cost;
        for (int i = 0; i < s; ++i) {
          bool in_i = i > 0 && (mask >> (i - 1) & 1U);
          for (int j = i + 1; j < s; ++j) {
            bool in_j = mask >> (j - 1) & 1U;
            if (in_i != in_j) cost += m.edge(i, j).intercept;
          }
        }
        if (passes(cost, z, alpha_sq)) found.emplace(m.cut_of(side), cost);
      }
    }
    for (auto& [c, cost] : found) out.push_back({c, cost});
  }
  std::sort(out.begin(), out.end(),
            [](const ApproxCut& a, const ApproxCut& b) { return a.cut < b.cut; });
  return out;
}

std::vector<ApproxCut> approx_cuts(const ParamGraph& g, const std::vector<Rational>& mu,
                                   const Rational& alpha, std::uint64_t seed,
                                   ApproxMode mode) {
  if (alpha < Rational(1)) throw std::invalid_argument("alpha must be at least 1");
  auto w = g.costs_at(mu);
  for (const auto& e : w.original_edges()) {
    if (e.cost.sign() < 0) throw DomainError("negative edge cost at the given point");
  }
  return approx_cuts_sq(w, alpha * alpha, seed, mode);
}

// ---------------------------------------------------------------------------
// scaling algorithm

ScalingLadder make_ladder(std::size_t m) {
  if (m == 0) throw std::invalid_argument("ladder needs at least one edge");
  ScalingLadder lad;
  const Rational em(static_cast<long long>(m));
  lad.beta = (lad.eps_sq - Rational(1)) / em;
  // Smallest k with eps^(2k) >= m^2 / (eps^2 - 1).
  const Rational target = em * em / (lad.eps_sq - Rational(1));
  int k = 0;
  Rational power(1);
  while (power < target) {
    power *= lad.eps_sq;
    ++k;
  }
  lad.p = 1 + k;
  lad.levels.push_back(Rational(0));
  Rational level = lad.beta;
  for (int i = 1; i <= lad.p; ++i) {
    lad.levels.push_back(level);
    level *= lad.eps_sq;
  }
  return lad;
}

namespace {

struct Probe {
  int where = 0;  // sign of (maximizer - point)
  SlopeResult right;
  std::optional<SlopeResult> left;
};

struct Located {
  Rational a, b;
  std::optional<Rational> hit;
  std::vector<Cut> witnesses;
  Rational z;
};

class Locator {
 public:
  Locator(const RayGraph& g, WorkStats* stats) : g_(g), stats_(stats) {}

  void count_call() {
    ++calls_;
    if (stats_) ++stats_->oracle_calls;
  }

  Probe probe(const Rational& r) {
    count_call();
    if (stats_) ++stats_->parametric_tests;
    Probe pr;
    pr.right = one_sided_slope(g_, r, +1, stats_);
    if (pr.right.slope.sign() > 0) {
      pr.where = +1;
      return pr;
    }
    pr.left = one_sided_slope(g_, r, -1, stats_);
    pr.where = pr.left->slope.sign() > 0 ? 0 : -1;
    return pr;
  }

  // Narrows (a, b), known to contain the maximizer, to a cell free of the
  // given points, unless one of them is the maximizer.
  Located locate(std::vector<Rational> pts, const Rational& a, const Rational& b) {
    std::erase_if(pts, [&](const Rational& x) { return !(a < x && x < b); });
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    Located out{a, b, std::nullopt, {}, Rational(0)};
    long lo = -1;
    long hi = static_cast<long>(pts.size());
    while (hi - lo > 1) {
      long mid = lo + (hi - lo) / 2;
      Probe pr = probe(pts[mid]);
      if (pr.where == 0) {
        out.hit = pts[mid];
        out.z = pr.right.z;
        add_witness(out.witnesses, pr.left->witness);
        add_witness(out.witnesses, pr.right.witness);
        return out;
      }
      if (pr.where > 0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    if (lo >= 0) out.a = pts[lo];
    if (hi < static_cast<long>(pts.size())) out.b = pts[hi];
    return out;
  }

  std::size_t calls() const { return calls_; }

 private:
  const RayGraph& g_;
  WorkStats* stats_;
  std::size_t calls_ = 0;
};

}  // namespace

MaxResult pmax_scaling_1d(const RayGraph& g, const Rational& lo, const Rational& hi,
                          WorkStats* stats, ScalingTrace* trace, std::uint64_t seed) {
  check_domain(g, lo, hi);
  ScalingTrace local;
  ScalingTrace& tr = trace ? *trace : local;
  tr = ScalingTrace{};
  Locator loc(g, stats);
  MaxResult out;
  auto done = [&](const Rational& x, const Rational& z) {
    out.lambda_star = x;
    out.mu_star = g.point(x);
    out.z_star = z;
    out.oracle_calls = loc.calls();
    return out;
  };

  // Endpoint maxima.
  loc.count_call();
  SlopeResult at_lo = one_sided_slope(g, lo, +1, stats);
  if (at_lo.slope.sign() <= 0) {
    tr.endpoint = true;
    out.witnesses.push_back(at_lo.witness);
    return done(lo, at_lo.z);
  }
  loc.count_call();
  SlopeResult at_hi = one_sided_slope(g, hi, -1, stats);
  if (at_hi.slope.sign() > 0) {
    tr.endpoint = true;
    out.witnesses.push_back(at_hi.witness);
    return done(hi, at_hi.z);
  }
  auto finish_hit = [&](const Located& cell) {
    tr.exact_hit = true;
    out.witnesses = cell.witnesses;
    return done(*cell.hit, cell.z);
  };

  const auto& edges = g.graph.original_edges();
  const std::size_t m = edges.size();

  // R1: a cell where the edge lines are totally ordered.
  std::vector<Rational> h1;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (auto x = line_intersection(edges[i].cost, edges[j].cost)) h1.push_back(*x);
    }
  }
  tr.h1_candidates = h1.size();
  Located r1 = loc.locate(std::move(h1), lo, hi);
  if (r1.hit) return finish_hit(r1);
  tr.r1_lo = r1.a;
  tr.r1_hi = r1.b;

  // Maximum spanning tree at an interior point; its lightest edge bounds Z.
  const Rational mu1 = midpoint(r1.a, r1.b);
  std::vector<Rational> w1(m);
  for (std::size_t i = 0; i < m; ++i) w1[i] = edges[i].cost.at(mu1);
  std::vector<std::size_t> by_cost(m);
  std::iota(by_cost.begin(), by_cost.end(), 0);
  std::stable_sort(by_cost.begin(), by_cost.end(),
                   [&](std::size_t x, std::size_t y) { return w1[x] < w1[y]; });
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::optional<std::size_t> ebar;
  int tree_edges = 0;
  for (auto it = by_cost.rbegin(); it != by_cost.rend(); ++it) {
    int ru = find(edges[*it].u);
    int rv = find(edges[*it].v);
    if (ru == rv) continue;
    parent[ru] = rv;
    ++tree_edges;
    ebar = *it;  // visited in decreasing cost, so the last one is the lightest
  }
  if (tree_edges + 1 != g.vertex_count()) {
    // Disconnected: Z vanishes and the lower endpoint was already returned.
    throw std::logic_error("disconnected graph past the endpoint checks");
  }
  tr.ebar = *ebar;
  tr.ladder = make_ladder(m);
  tr.ladder.base_edge = *ebar;
  const AffineLine& base = edges[*ebar].cost;
  const ScalingLadder& lad = tr.ladder;

  // Restriction when the base edge vanishes somewhere on R1.
  std::vector<Rational> h2;
  tr.r1p_lo = r1.a;
  tr.r1p_hi = r1.b;
  if (base.at(r1.a).is_zero() || base.at(r1.b).is_zero()) {
    tr.restricted = true;
    std::optional<std::size_t> etilde;
    for (std::size_t idx : by_cost) {
      if (edges[idx].cost.at(r1.a).sign() > 0 && edges[idx].cost.at(r1.b).sign() > 0) {
        etilde = idx;
        break;
      }
    }
    if (!etilde) throw std::logic_error("no edge stays positive on the cell");
    AffineLine gap = base.scaled(lad.levels[lad.p]) - edges[*etilde].cost;
    if (gap.slope.is_zero()) {
      if (gap.intercept.sign() < 0) throw std::logic_error("empty restricted cell");
    } else {
      Rational x = -gap.intercept / gap.slope;
      if (gap.slope.sign() > 0) {
        tr.r1p_lo = max(r1.a, x);
      } else {
        tr.r1p_hi = min(r1.b, x);
      }
    }
    // The restricted cell's ends become located points in their own right.
    h2.push_back(tr.r1p_lo);
    h2.push_back(tr.r1p_hi);
  }

  // R2: a cell of the ladder arrangement.
  for (const auto& e : edges) {
    for (int i = 1; i <= lad.p; ++i) {
      if (auto x = line_intersection(e.cost, base.scaled(lad.levels[i]))) h2.push_back(*x);
    }
  }
  tr.h2_candidates = h2.size();
  Located r2 = loc.locate(std::move(h2), r1.a, r1.b);
  if (r2.hit) return finish_hit(r2);
  tr.r2_lo = r2.a;
  tr.r2_hi = r2.b;

  // Approximate cuts at an interior point of R2 contain every optimal cut at
  // the maximizer; the maximizer is the top of their envelope.
  const Rational mu2 = midpoint(r2.a, r2.b);
  auto cuts = approx_cuts_sq(g.costs_at(mu2), lad.eps_sq, seed);
  std::vector<AffineLine> lines;
  lines.reserve(cuts.size());
  for (const auto& c : cuts) {
    lines.push_back(cut_cost(g, c.cut));
    tr.cuts.push_back(c.cut);
  }
  auto env = lower_envelope(lines, r2.a, r2.b);
  const Rational x = env.leftmost_argmax();
  const Rational z = env.value(x);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].at(x) == z) out.witnesses.push_back(cuts[i].cut);
  }
  return done(x, z);
}

}  // namespace paracut
