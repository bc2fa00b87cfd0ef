// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "paracut/bench.hpp"
#include "paracut/graph_io.hpp"
#include "paracut/megiddo.hpp"
#include "paracut/oracle.hpp"
#include "paracut/pmax.hpp"

using namespace paracut;
using testing::R;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Report {
  int failures = 0;
  void line(int id, bool ok, const std::string& what) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << what << std::endl;
    if (!ok) ++failures;
  }
};

constexpr int kCorpus = 500;

bool same_nb(const BreakpointResult& a, const BreakpointResult& b) {
  if (a.found != b.found) return false;
  return !a.found || (a.lambda_nb == b.lambda_nb && a.slope_after == b.slope_after);
}

void criterion1(Report& rep) {
  auto start = Clock::now();
  int agree = 0;
  int found = 0;
  for (int s = 0; s < kCorpus; ++s) {
    auto inst = testing::corpus_instance(s);
    auto p = make_ray_problem(inst.ray, inst.hi);
    auto det = pnb_deterministic(p);
    auto brute = oracle_pnb(p);
    if (same_nb(det, brute)) ++agree;
    if (brute.found) ++found;
  }
  double t = seconds_since(start);
  std::ostringstream msg;
  msg << "pnb_deterministic == oracle_pnb on " << agree << "/" << kCorpus << " instances ("
      << found << " with a breakpoint), " << t << " s (limit 60 s)";
  rep.line(1, agree == kCorpus && t < 60, msg.str());
}

// The slope-sign invariant of a reported maximizer.
bool max_invariant(const RayGraph& g, const Rational& lo, const Rational& hi,
                   const MaxResult& r) {
  if (r.lambda_star < hi && one_sided_slope(g, r.lambda_star, +1).slope.sign() > 0) return false;
  if (lo < r.lambda_star && one_sided_slope(g, r.lambda_star, -1).slope.sign() < 0) return false;
  return true;
}

void criterion2(Report& rep) {
  int agree = 0;
  int lambda_equal = 0;
  const char* names[] = {"newton", "scaling", "megiddo"};
  for (int s = 0; s < kCorpus; ++s) {
    auto inst = testing::corpus_instance(s);
    auto brute = oracle_pmax(inst.ray, R(0), inst.hi);
    auto env = oracle_envelope(inst.ray, R(0), inst.hi);
    MaxResult rs[] = {pmax_newton(inst.ray, R(0), inst.hi),
                      pmax_scaling_1d(inst.ray, R(0), inst.hi, nullptr, nullptr, s),
                      megiddo_maximize(inst.ray, R(0), inst.hi)};
    bool ok = true;
    for (int a = 0; a < 3; ++a) {
      const MaxResult& r = rs[a];
      bool good = r.z_star == brute.z_star;
      if (r.lambda_star == brute.lambda_star) {
        ++lambda_equal;
      } else {
        good = good && env.value(r.lambda_star) == r.z_star &&
               max_invariant(inst.ray, R(0), inst.hi, r);
      }
      if (!good) {
        std::cerr << "  criterion 2 mismatch: instance " << s << " " << names[a] << '\n';
        ok = false;
      }
    }
    if (ok) ++agree;
  }
  std::ostringstream msg;
  msg << "newton, scaling and megiddo z* == oracle_pmax on " << agree << "/" << kCorpus
      << " instances (" << lambda_equal << "/" << 3 * kCorpus << " identical lambda*)";
  rep.line(2, agree == kCorpus, msg.str());
}

void criterion3(Report& rep) {
  auto start = Clock::now();
  const int trials = 20000;
  const double p = 1.0 / 15.0;
  const double sigma = std::sqrt(p * (1 - p) / trials);
  const double floor = p - 3 * sigma;
  bool ok = true;
  std::ostringstream msg;
  msg << "random trial success fractions";
  for (const char* name : {"unique_cut_a.pgmc", "unique_cut_b.pgmc", "unique_cut_c.pgmc"}) {
    auto g = read_graph_file(std::string(FIXTURE_DIR) + "/" + name);
    auto prob = make_ray_problem(restrict_to_ray(g, {R(0)}, {BigInt(1)}), R(4));
    auto brute = oracle_pnb(prob);
    // The slope-defining optimal cut must be unique for the bound to apply.
    auto cat = cut_catalog(prob.ray);
    LexValue best = cat.lines[0].lex_at(brute.lambda_nb);
    for (const auto& l : cat.lines) best = std::min(best, l.lex_at(brute.lambda_nb));
    int defining = 0;
    for (const auto& l : cat.lines) defining += l.lex_at(brute.lambda_nb) == best;
    int hits = 0;
    for (int t = 0; t < trials; ++t) {
      Cut survivor;
      auto x = pnb_random_trial(prob, static_cast<std::uint64_t>(t), &survivor);
      if (survivor == brute.witness && x == brute.lambda_nb) ++hits;
    }
    double frac = static_cast<double>(hits) / trials;
    ok = ok && brute.found && defining == 1 && frac >= floor;
    msg << " " << name << "=" << frac;
  }
  msg << " (floor " << floor << "), " << seconds_since(start) << " s";
  rep.line(3, ok, msg.str());
}

void criterion4(Report& rep) {
  const int count = 1000;
  int match = 0;
  int undershoot = 0;
  for (int s = 0; s < count; ++s) {
    auto inst = testing::corpus_instance(100000 + s, 5, 8);
    auto p = make_ray_problem(inst.ray, inst.hi);
    auto brute = oracle_pnb(p);
    RandomizedStats rs;
    auto r = pnb_randomized(p, static_cast<std::uint64_t>(s) * 1000, R(1, 100), nullptr, &rs);
    if (same_nb(r, brute)) ++match;
    if (rs.min_candidate) {
      const Rational bound = brute.found ? brute.lambda_nb : p.lambda_bar;
      if (*rs.min_candidate < bound) ++undershoot;
    }
  }
  std::ostringstream msg;
  msg << "pnb_randomized (eta = 1/100) matched oracle on " << match << "/" << count
      << " instances (need >= 99%), candidates below the breakpoint: " << undershoot;
  rep.line(4, match * 100 >= 99 * count && undershoot == 0, msg.str());
}

void criterion5(Report& rep) {
  int checked = 0;
  int agree = 0;
  int premise = 0;
  for (int s = 0; s < kCorpus; ++s) {
    auto inst = testing::corpus_instance(s);
    auto p = make_ray_problem(inst.ray, inst.hi);
    auto det = pnb_deterministic(p);
    if (!det.found) continue;
    ++checked;
    auto via = pnb_via_pmax(p);
    if (same_nb(via, det)) ++agree;
    if (det.slope_after <= p.slope0 - R(1)) ++premise;
  }
  std::ostringstream msg;
  msg << "pnb_via_pmax == pnb_deterministic on " << agree << "/" << checked
      << " instances with a breakpoint; slope drop >= 1 on " << premise << "/" << checked;
  rep.line(5, agree == checked && premise == checked && checked > 0, msg.str());
}

// Cheapest cut of the original graph that keeps every supervertex of `g`
// whole and separates s from t.
Rational min_separating_in_minor(const Multigraph<Rational>& g, int s, int t) {
  auto live = g.live_vertices();
  const std::size_t k = live.size();
  std::optional<Rational> best;
  for (std::uint32_t mask = 1; mask < (1U << (k - 1)); ++mask) {
    std::vector<int> side;
    bool has_s = false;
    bool has_t = false;
    for (std::size_t a = 1; a < k; ++a) {
      if (!(mask >> (a - 1) & 1U)) continue;
      side.push_back(live[a]);
      has_s = has_s || live[a] == s;
      has_t = has_t || live[a] == t;
    }
    if (has_s == has_t) continue;
    Rational c = cut_cost(g, expand_cut(g, std::span<const int>(side)));
    if (!best || c < *best) best = c;
  }
  return *best;
}

void criterion6(Report& rep) {
  int exact = 0;
  int pairs = 0;
  int pairs_ok = 0;
  for (int s = 0; s < 200; ++s) {
    std::mt19937_64 rng(50000 + s);
    int n = std::uniform_int_distribution<int>(2, 8)(rng);
    int m = std::uniform_int_distribution<int>(n - 1, n * (n - 1) / 2)(rng);
    auto g = random_weighted_graph(n, m, 20, 50000 + s, s % 7 != 0);
    if (stoer_wagner(g).value == oracle_min_cut(g).value) ++exact;
    auto h = g;
    while (h.live_count() > 1) {
      auto ord = ma_ordering(h);
      auto [a, b] = ord.pendant_pair;
      ++pairs;
      if (ord.last_cut_value == min_separating_in_minor(h, a, b) &&
          ord.last_cut_value == h.degree(b)) {
        ++pairs_ok;
      }
      h.contract_in_place(a, b);
    }
  }
  std::ostringstream msg;
  msg << "Stoer-Wagner exact on " << exact << "/200 graphs; pendant pairs with "
      << "min separating cut = c(delta(v_k)): " << pairs_ok << "/" << pairs;
  rep.line(6, exact == 200 && pairs_ok == pairs, msg.str());
}

void criterion7(Report& rep) {
  int exact = 0;
  int total = 0;
  int bounded = 0;
  int bounded_total = 0;
  std::mt19937_64 rng(77);
  const Rational alphas[] = {R(1), R(13, 10), R(3, 2), R(2)};
  for (int s = 0; s < 300; ++s) {
    auto inst = testing::corpus_instance(60000 + s, 4, 9);
    Rational mu = testing::random_rational(rng, 0, 4);
    auto w = inst.graph.costs_at({mu});
    const int n = inst.graph.vertex_count();
    for (const auto& alpha : alphas) {
      auto got = approx_cuts(inst.graph, {mu}, alpha, 0, ApproxMode::bruteforce);
      // Independent enumeration straight from the cut definition.
      std::vector<std::pair<Cut, Rational>> all;
      for (std::uint64_t mask = 2; mask < (std::uint64_t{1} << n); mask += 2) {
        Cut c = Cut::from_mask(n, mask);
        all.push_back({c, cut_cost(w, c)});
      }
      Rational z = all.front().second;
      for (const auto& [c, v] : all) z = min(z, v);
      std::vector<std::pair<Cut, Rational>> want;
      for (const auto& [c, v] : all) {
        if (v <= alpha * z) want.push_back({c, v});
      }
      std::sort(want.begin(), want.end());
      bool same = got.size() == want.size();
      for (std::size_t i = 0; same && i < got.size(); ++i) {
        same = got[i].cut == want[i].first && got[i].cost == want[i].second;
      }
      ++total;
      if (same) ++exact;
      if (alpha == R(13, 10)) {
        ++bounded_total;
        if (got.size() <= static_cast<std::size_t>(n * n)) ++bounded;
      }
    }
  }
  std::ostringstream msg;
  msg << "bruteforce approx_cuts exact on " << exact << "/" << total
      << " queries; count <= n^2 at alpha = 13/10 on " << bounded << "/" << bounded_total;
  rep.line(7, exact == total && bounded == bounded_total, msg.str());
}

void criterion8(Report& rep) {
  std::mt19937_64 rng(88);
  std::uniform_int_distribution<long long> k(1, 40);
  std::uniform_int_distribution<long long> c(-1000, 1000);
  int sets_ok = 0;
  for (int set = 0; set < 200; ++set) {
    std::vector<AffineLine> ls(static_cast<std::size_t>(k(rng)));
    for (auto& l : ls) l = {testing::random_rational(rng, -100, 100), R(c(rng), 7)};
    Rational lo = testing::random_rational(rng, -10, 0);
    Rational hi = lo + testing::random_rational(rng, 1, 20);
    auto env = lower_envelope(ls, lo, hi);
    bool ok = true;
    for (int s = 0; s < 100; ++s) {
      Rational x = lo + (hi - lo) * testing::random_rational(rng, 0, 1, 10007);
      Rational direct = ls[0].at(x);
      for (const auto& l : ls) direct = min(direct, l.at(x));
      ok = ok && env.value(x) == direct;
    }
    if (ok) ++sets_ok;
  }
  int rays_ok = 0;
  int rays = 0;
  for (int s = 0; s < kCorpus; ++s) {
    auto inst = testing::corpus_instance(s);
    auto p = make_ray_problem(inst.ray, inst.hi);
    if (p.lambda_bar.sign() <= 0) continue;
    ++rays;
    if (ray_envelope(p) == oracle_envelope(inst.ray, R(0), p.lambda_bar)) ++rays_ok;
  }
  std::ostringstream msg;
  msg << "lower_envelope == pointwise min on " << sets_ok << "/200 line sets; "
      << "ray_envelope == oracle_envelope on " << rays_ok << "/" << rays << " rays";
  rep.line(8, sets_ok == 200 && rays_ok == rays, msg.str());
}

void criterion9(Report& rep) {
  auto w = random_weighted_graph(400, 8000, 1000, 99);
  auto t0 = Clock::now();
  auto cut = stoer_wagner(w);
  double sw_s = seconds_since(t0);

  InstanceParams ip;
  ip.n = 200;
  ip.m = 2000;
  ip.seed = 99;
  auto ray = restrict_to_ray(random_instance(ip), {R(0)}, {BigInt(1)});
  auto t1 = Clock::now();
  auto p = make_ray_problem(ray, R(4));
  auto det = pnb_deterministic(p);
  double det_s = seconds_since(t1);

  BenchConfig cfg;
  cfg.sizes = {100};
  cfg.algorithms = {"det", "megiddo"};
  cfg.seed = 5;
  auto rows = run_bench(cfg);
  double ratio = rows[1].sw_equivalents / rows[0].sw_equivalents;
  bool same = rows[0].result == rows[1].result;

  std::ostringstream msg;
  msg << "SW n=400 m=" << w.original_edges().size() << ": " << sw_s << " s (limit 10, value "
      << cut.value.to_string() << "); det n=200 m=" << ray.edge_count() << ": " << det_s
      << " s (limit 60, " << (det.found ? det.lambda_nb.to_string() : "none")
      << "); megiddo/det SW-equivalents at n=100: " << rows[1].sw_equivalents << "/"
      << rows[0].sw_equivalents << " = " << ratio << " (need >= 5)";
  rep.line(9, sw_s < 10 && det_s < 60 && ratio >= 5 && same, msg.str());
}

}  // namespace

int main() {
  Report rep;
  const std::function<void(Report&)> criteria[] = {criterion1, criterion2, criterion3,
                                                   criterion4, criterion5, criterion6,
                                                   criterion7, criterion8, criterion9};
  int id = 1;
  for (const auto& run : criteria) {
    try {
      run(rep);
    } catch (const std::exception& e) {
      rep.line(id, false, std::string("threw: ") + e.what());
    }
    ++id;
  }
  std::cout << (rep.failures == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(rep.failures))
            << std::endl;
  return rep.failures == 0 ? 0 : 1;
}
