#include "paracut/oracle.hpp"

#include <cstdlib>
#include <optional>
#include <string>

namespace paracut {

int oracle_max_n() {
  if (const char* env = std::getenv("PARACUT_ORACLE_MAX_N")) {
    try {
      int v = std::stoi(env);
      if (v >= 2 && v <= 63) return v;
    } catch (const std::exception&) {
    }
  }
  return 16;
}

void require_oracle_size(int n) {
  if (n > oracle_max_n()) {
    throw ResourceError("brute-force enumeration limited to n <= " +
                        std::to_string(oracle_max_n()) + " (got " + std::to_string(n) + ")");
  }
}

CutCatalog cut_catalog(const RayGraph& g) {
  CutCatalog out;
  enumerate_cuts(g.graph, [&](Cut c, const AffineLine& line) {
    out.cuts.push_back(std::move(c));
    out.lines.push_back(line);
  });
  return out;
}

PiecewiseLinearConcave oracle_envelope(const RayGraph& g, const Rational& lo,
                                       const Rational& hi) {
  auto cat = cut_catalog(g);
  if (cat.lines.empty()) throw std::invalid_argument("envelope needs two vertices");
  return lower_envelope(cat.lines, lo, hi);
}

BreakpointResult oracle_pnb(const RayProblem& p) {
  BreakpointResult out;
  out.slope_before = p.slope0;
  const Rational& U = p.lambda_bar;
  if (U.sign() <= 0) return out;
  auto cat = cut_catalog(p.ray);
  auto env = lower_envelope(cat.lines, Rational(0), U);

  std::optional<Rational> at;
  if (env.pieces().size() > 1) {
    at = env.pieces()[1].start;
  } else if (admissible_side(p.ray, U, +1)) {
    // Z is affine on [0, U]; look at the right derivative at U.
    LexValue best = cat.lines.front().lex_at(U, +1);
    for (const auto& l : cat.lines) {
      if (l.lex_at(U, +1) < best) best = l.lex_at(U, +1);
    }
    if (best.slope < env.pieces()[0].line.slope) at = U;
  }
  if (!at) return out;

  // Cheapest cut just to the right of the breakpoint.
  std::size_t arg = 0;
  for (std::size_t i = 1; i < cat.lines.size(); ++i) {
    if (cat.lines[i].lex_at(*at, +1) < cat.lines[arg].lex_at(*at, +1)) arg = i;
  }
  out.found = true;
  out.lambda_nb = *at;
  out.mu_nb = p.ray.point(*at);
  out.witness = cat.cuts[arg];
  out.slope_before = env.pieces()[0].line.slope;
  out.slope_after = cat.lines[arg].slope;
  return out;
}

MaxResult oracle_pmax(const RayGraph& g, const Rational& lo, const Rational& hi) {
  for (const auto& e : g.graph.original_edges()) {
    if (e.cost.at(lo).sign() < 0 || e.cost.at(hi).sign() < 0) {
      throw DomainError("negative edge cost on the maximization domain");
    }
  }
  auto cat = cut_catalog(g);
  auto env = lower_envelope(cat.lines, lo, hi);
  MaxResult out;
  out.lambda_star = env.leftmost_argmax();
  out.z_star = env.value(out.lambda_star);
  out.mu_star = g.point(out.lambda_star);
  for (std::size_t i = 0; i < cat.lines.size(); ++i) {
    if (cat.lines[i].at(out.lambda_star) == out.z_star) out.witnesses.push_back(cat.cuts[i]);
  }
  return out;
}

MinCut<Rational> oracle_min_cut(const Multigraph<Rational>& g) {
  std::optional<MinCut<Rational>> best;
  enumerate_cuts(g, [&](Cut c, const Rational& cost) {
    if (!best || cost < best->value) best = MinCut<Rational>{std::move(c), cost};
  });
  if (!best) throw std::invalid_argument("min cut needs two vertices");
  return std::move(*best);
}

Rational oracle_min_separating(const Multigraph<Rational>& g, int s, int t) {
  std::optional<Rational> best;
  enumerate_cuts(g, [&](const Cut& c, const Rational& cost) {
    auto m = c.mask();
    if (((m >> s) ^ (m >> t)) & 1U) {
      if (!best || cost < *best) best = cost;
    }
  });
  if (!best) throw std::invalid_argument("s and t must differ");
  return *best;
}

}  // namespace paracut
