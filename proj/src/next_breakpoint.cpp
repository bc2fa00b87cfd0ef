#include "paracut/next_breakpoint.hpp"

#include <cmath>
#include <stdexcept>

#include "paracut/dense_minor.hpp"

namespace paracut {

Rational lambda_bar(const RayGraph& g) {
  Rational total;
  for (const auto& e : g.graph.original_edges()) total += abs(e.cost.intercept);
  return total;
}

std::optional<Rational> nonnegativity_limit(const RayGraph& g) {
  std::optional<Rational> limit;
  for (const auto& e : g.graph.original_edges()) {
    const auto& [c0, c1] = e.cost;
    if (c0.sign() < 0) {
      throw DomainError("edge " + std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1) +
                        " has negative cost at the ray origin");
    }
    if (c1.sign() < 0) {
      Rational zero_at = c0 / -c1;
      if (!limit || zero_at < *limit) limit = zero_at;
    }
  }
  return limit;
}

RayProblem make_ray_problem(RayGraph ray, std::optional<Rational> domain_hi, WorkStats* stats) {
  if (ray.vertex_count() < 2) throw std::invalid_argument("ray problem needs two vertices");
  if (domain_hi && domain_hi->sign() < 0) {
    throw std::invalid_argument("domain cap must be nonnegative");
  }
  RayProblem p;
  p.lambda_bar = lambda_bar(ray);
  if (domain_hi) p.lambda_bar = min(p.lambda_bar, *domain_hi);
  if (auto limit = nonnegativity_limit(ray)) p.lambda_bar = min(p.lambda_bar, *limit);
  if (admissible_side(ray, Rational(0), +1)) {
    auto s = one_sided_slope(ray, Rational(0), +1, stats);
    p.z0 = s.z;
    p.slope0 = s.slope;
  } else {
    // The ray leaves the nonnegative region at once; lambda_bar is 0.
    auto mc = min_cut_at(ray, Rational(0), stats);
    p.z0 = mc.value;
    p.slope0 = cut_cost(ray, mc.cut).slope;
  }
  p.domain_hi = std::move(domain_hi);
  p.ray = std::move(ray);
  return p;
}

bool confirm_breakpoint(const RayProblem& p, const Rational& lambda, BreakpointResult& result,
                        WorkStats* stats) {
  if (lambda.sign() <= 0 || p.lambda_bar < lambda) return false;
  if (!admissible_side(p.ray, lambda, +1)) return false;
  auto s = one_sided_slope(p.ray, lambda, +1, stats);
  if (!(LexValue{s.z, s.slope} < p.initial_line().lex_at(lambda))) return false;
  result.found = true;
  result.lambda_nb = lambda;
  result.mu_nb = p.ray.point(lambda);
  result.witness = std::move(s.witness);
  result.slope_before = p.slope0;
  result.slope_after = s.slope;
  return true;
}

BreakpointResult pnb_deterministic(const RayProblem& p, WorkStats* stats,
                                   DeterministicTrace* trace) {
  BreakpointResult none;
  none.slope_before = p.slope0;
  const Rational& cap = p.lambda_bar;
  if (cap.sign() <= 0) return none;

  const AffineLine L = p.initial_line();
  Multigraph<AffineLine> g = p.ray.graph;
  Rational upper = cap;
  while (g.live_count() > 1) {
    auto live = g.live_vertices();
    std::vector<AffineLine> singles;
    singles.reserve(live.size());
    for (int s : live) singles.push_back(g.degree(s));
    auto env = lower_envelope(singles, Rational(0), cap);
    if (env.value(Rational(0)) < p.z0) {
      throw std::invalid_argument("z0 exceeds a cut value at lambda = 0");
    }
    auto hat = first_crossing(env, L, Rational(0));
    if (hat && hat->is_zero()) {
      throw std::invalid_argument("slope0 is not the right derivative of Z at 0");
    }
    Rational lambda_r = hat ? min(cap, *hat) : cap;
    if (lambda_r < upper) upper = lambda_r;
    if (trace) {
      trace->iterations.push_back(
          {g.live_count(), lambda_r, env.value(lambda_r), L.at(lambda_r)});
    }
    auto weights = g.map_costs([&](const AffineLine& l) { return l.at(lambda_r); });
    auto ord = ma_ordering(weights, stats);
    g.contract_in_place(ord.pendant_pair.first, ord.pendant_pair.second);
  }

  BreakpointResult out;
  out.trials = 1;
  if (confirm_breakpoint(p, upper, out, stats)) return out;
  return none;
}

namespace {

std::optional<Rational> positive_crossing(const AffineLine& L, const AffineLine& cut_line) {
  auto x = line_intersection(L, cut_line);
  if (x && x->sign() > 0) return x;
  return std::nullopt;
}

void keep_min(std::optional<Rational>& best, const std::optional<Rational>& x) {
  if (x && (!best || *x < *best)) best = x;
}

// One random contraction with the edge distribution taken at the point
// where L meets the average singleton-cut line.
void contract_once(DenseMinor& m, const RayProblem& p, gmp_randclass& rng) {
  const int k = m.size();
  AffineLine average = m.degree_sum().scaled(Rational(1) / Rational(k));
  auto x = line_intersection(p.initial_line(), average);
  Rational at = (x && x->sign() >= 0 && *x <= p.lambda_bar) ? *x : p.lambda_bar;
  auto [i, j] = m.sample_edge(at, rng);
  m.merge(i, j);
}

// ceil(1 + k / sqrt(2)).
int recursion_target(int k) {
  int c = 0;
  while (2 * c * c < k * k) ++c;
  return 1 + c;
}

constexpr int kLeafSize = 6;

void enumerate_leaf(const DenseMinor& m, const AffineLine& L, std::optional<Rational>& best) {
  const int k = m.size();
  for (std::uint32_t mask = 1; mask < (1U << (k - 1)); ++mask) {
    AffineLine line;
    for (int i = 0; i < k; ++i) {
      bool in_i = i > 0 && (mask >> (i - 1) & 1U);
      for (int j = i + 1; j < k; ++j) {
        bool in_j = mask >> (j - 1) & 1U;
        if (in_i != in_j) line += m.edge(i, j);
      }
    }
    keep_min(best, positive_crossing(L, line));
  }
}

void recurse(const DenseMinor& m, const RayProblem& p, gmp_randclass& rng,
             RandomizedStats& rs, std::optional<Rational>& best) {
  if (m.size() <= kLeafSize) {
    ++rs.leaves;
    enumerate_leaf(m, p.initial_line(), best);
    return;
  }
  const int target = recursion_target(m.size());
  for (int branch = 0; branch < 2; ++branch) {
    DenseMinor sub = m;
    while (sub.size() > target) contract_once(sub, p, rng);
    recurse(sub, p, rng, rs, best);
  }
}

}  // namespace

std::optional<Rational> pnb_random_trial(const RayProblem& p, std::uint64_t seed,
                                         Cut* survivor) {
  if (p.lambda_bar.sign() <= 0) return std::nullopt;
  gmp_randclass rng(gmp_randinit_mt);
  seed_rng(rng, seed);
  DenseMinor m(p.ray);
  while (m.size() > 2) contract_once(m, p, rng);
  if (survivor) {
    const int one = 1;
    *survivor = m.cut_of(std::span<const int>(&one, 1));
  }
  return positive_crossing(p.initial_line(), m.edge(0, 1));
}

std::size_t randomized_repetitions(int n, const Rational& eta) {
  if (eta.sign() <= 0 || !(eta < Rational(1))) {
    throw std::invalid_argument("eta must lie in (0, 1)");
  }
  double log_n = std::max(1.0, std::log2(static_cast<double>(n)));
  return static_cast<std::size_t>(std::ceil(2.0 * std::log(1.0 / eta.to_double()) * log_n));
}

BreakpointResult pnb_randomized(const RayProblem& p, std::uint64_t seed, const Rational& eta,
                                WorkStats* stats, RandomizedStats* rstats) {
  const std::size_t reps = randomized_repetitions(p.ray.vertex_count(), eta);
  BreakpointResult none;
  none.slope_before = p.slope0;
  none.trials = reps;
  RandomizedStats rs;
  rs.repetitions = reps;
  std::optional<Rational> best;
  if (p.lambda_bar.sign() > 0) {
    const DenseMinor start(p.ray);
    for (std::size_t i = 0; i < reps; ++i) {
      gmp_randclass rng(gmp_randinit_mt);
      seed_rng(rng, seed + i);
      recurse(start, p, rng, rs, best);
    }
  }
  rs.min_candidate = best;
  if (rstats) *rstats = rs;
  if (!best || p.lambda_bar < *best) return none;
  BreakpointResult out;
  out.trials = reps;
  if (confirm_breakpoint(p, *best, out, stats)) return out;
  return none;
}

PiecewiseLinearConcave ray_envelope(const RayProblem& p, WorkStats* stats) {
  const Rational hi = p.lambda_bar;
  if (hi.sign() <= 0) throw std::invalid_argument("ray envelope needs lambda_bar > 0");
  std::vector<PiecewiseLinearConcave::Piece> pieces;
  Rational origin;
  RayProblem current = p;
  while (true) {
    // The current problem's line, written in absolute coordinates.
    AffineLine line{current.z0 - current.slope0 * origin, current.slope0};
    pieces.push_back({origin, line});
    auto step = pnb_deterministic(current, stats);
    if (!step.found) break;
    origin += step.lambda_nb;
    if (!(origin < hi)) break;
    current = make_ray_problem(p.ray.shifted(origin), hi - origin, stats);
  }
  return PiecewiseLinearConcave(Rational(0), hi, std::move(pieces));
}

PiecewiseLinearConcave chained_envelope(const RayGraph& g, const Rational& lo,
                                        const Rational& hi, WorkStats* stats) {
  if (!(lo < hi)) throw std::invalid_argument("envelope domain must satisfy lo < hi");
  for (const auto& e : g.graph.original_edges()) {
    if (e.cost.at(lo).sign() < 0 || e.cost.at(hi).sign() < 0) {
      throw DomainError("negative edge cost on the envelope domain");
    }
  }
  std::vector<PiecewiseLinearConcave::Piece> pieces;
  auto append = [&](const Rational& start, const AffineLine& line) {
    if (!pieces.empty() && pieces.back().line == line) return;
    pieces.push_back({start, line});
  };
  Rational origin = lo;
  while (origin < hi) {
    RayProblem p = make_ray_problem(g.shifted(origin), hi - origin, stats);
    if (p.lambda_bar.sign() <= 0) {
      // Every cost vanishes at origin, so Z is linear from here on.
      append(origin, {p.z0 - p.slope0 * origin, p.slope0});
      break;
    }
    auto rel = ray_envelope(p, stats);
    for (const auto& pc : rel.pieces()) {
      append(pc.start + origin,
             {pc.line.intercept - pc.line.slope * origin, pc.line.slope});
    }
    origin += rel.hi();
  }
  return PiecewiseLinearConcave(lo, hi, std::move(pieces));
}

}  // namespace paracut
