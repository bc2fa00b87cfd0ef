#include "paracut/mincut_sw.hpp"

namespace paracut {

MinCut<Rational> sw_mincut(const ParamGraph& g, const std::vector<Rational>& mu,
                           WorkStats* stats) {
  auto weights = g.costs_at(mu);
  detail::require_nonnegative(weights);
  return stoer_wagner(std::move(weights), stats);
}

MinCut<Rational> min_cut_at(const RayGraph& g, const Rational& lambda, WorkStats* stats) {
  return stoer_wagner(g.costs_at(lambda), stats);
}

SlopeResult one_sided_slope(const RayGraph& g, const Rational& at, int dir,
                            WorkStats* stats) {
  if (dir != 1 && dir != -1) throw std::invalid_argument("direction must be +1 or -1");
  auto best = stoer_wagner(g.lex_costs_at(at, dir), stats);
  SlopeResult out;
  out.z = best.value.value;
  out.slope = dir > 0 ? best.value.slope : -best.value.slope;
  out.line = cut_cost(g, best.cut);
  out.witness = std::move(best.cut);
  return out;
}

bool admissible_side(const RayGraph& g, const Rational& at, int dir) {
  for (const auto& e : g.graph.original_edges()) {
    if (e.cost.lex_at(at, dir).sign() < 0) return false;
  }
  return true;
}

}  // namespace paracut
