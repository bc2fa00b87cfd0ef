// paracut: parametric global minimum cuts from the command line.
//
//   paracut mincut <file> --at 1/2
//   paracut next-breakpoint <file> --from 0 --dir 1 --algorithm det
//   paracut maximize <file> --from 0 --dir 1 --lo 0 --hi 4
//
// Rationals are read and written as "p" or "p/q". Exit codes: 0 ok, 2 bad
// input, 3 negative edge cost, 4 instance too large for brute force.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "paracut/bench.hpp"
#include "paracut/envelope.hpp"
#include "paracut/graph_io.hpp"
#include "paracut/megiddo.hpp"
#include "paracut/next_breakpoint.hpp"
#include "paracut/oracle.hpp"
#include "paracut/pmax.hpp"

using json = nlohmann::json;
using namespace paracut;

namespace {

std::vector<BigInt> parse_direction(const std::string& text) {
  std::vector<BigInt> nu;
  bool nonzero = false;
  for (const auto& r : parse_rational_list(text)) {
    if (!r.is_integer()) throw ParseError("direction entries must be integers: " + text);
    nu.push_back(r.numerator());
    if (!r.is_zero()) nonzero = true;
  }
  if (!nonzero) throw ParseError("direction must be nonzero");
  return nu;
}

json rationals(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(r.to_string());
  return out;
}

json cut_json(const Cut& c) { return c.one_based(); }

void check_dimension(const ParamGraph& g, std::size_t got, const char* what) {
  if (got != static_cast<std::size_t>(g.d)) {
    throw ParseError(std::string(what) + " has " + std::to_string(got) +
                     " entries, instance has d = " + std::to_string(g.d));
  }
}

struct RayArgs {
  std::string file;
  std::string from;
  std::string dir;
};

RayGraph load_ray(const RayArgs& a, ParamGraph& g) {
  g = read_graph_file(a.file);
  auto mu0 = parse_rational_list(a.from);
  auto nu = parse_direction(a.dir);
  check_dimension(g, mu0.size(), "--from");
  check_dimension(g, nu.size(), "--dir");
  return restrict_to_ray(g, mu0, nu);
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parametric global minimum cuts with exact rational arithmetic"};
  app.require_subcommand(1);

  // mincut
  std::string file;
  std::string at;
  auto* mincut = app.add_subcommand("mincut", "Minimum cut at a parameter point");
  mincut->add_option("file", file, "instance file")->required();
  mincut->add_option("--at", at, "parameter point mu (comma separated)")->required();

  // eval
  std::string eval_cut;
  std::string eval_dir;
  auto* eval = app.add_subcommand("eval", "Z at a point, a given cut's cost, or slopes along a direction");
  eval->add_option("file", file, "instance file")->required();
  eval->add_option("--at", at, "parameter point mu")->required();
  eval->add_option("--cut", eval_cut, "1-based vertices of one side");
  eval->add_option("--dir", eval_dir, "integer direction for one-sided slopes");

  // next-breakpoint
  RayArgs ray_args;
  std::string nb_alg = "det";
  std::string mx_alg = "newton";
  std::string env_alg = "oracle";
  std::uint64_t seed = 0;
  std::string eta = "1/100";
  std::string cap;
  auto* nb = app.add_subcommand("next-breakpoint", "First breakpoint of Z along a ray");
  nb->add_option("file", ray_args.file, "instance file")->required();
  nb->add_option("--from", ray_args.from, "ray origin mu0")->required();
  nb->add_option("--dir", ray_args.dir, "integer direction nu")->required();
  nb->add_option("--algorithm", nb_alg, "det|rand|newton|megiddo|oracle")
      ->default_val("det")
      ->check(CLI::IsMember({"det", "rand", "newton", "megiddo", "oracle"}));
  nb->add_option("--seed", seed, "random seed")->default_val(0);
  nb->add_option("--eta", eta, "failure probability for rand")->default_val("1/100");
  nb->add_option("--hi", cap, "optional cap on lambda");

  // maximize
  std::string lo_text;
  std::string hi_text;
  auto* mx = app.add_subcommand("maximize", "Maximize Z over a segment of a ray");
  mx->add_option("file", ray_args.file, "instance file")->required();
  mx->add_option("--from", ray_args.from, "ray origin mu0")->required();
  mx->add_option("--dir", ray_args.dir, "integer direction nu")->required();
  mx->add_option("--lo", lo_text, "lower lambda")->required();
  mx->add_option("--hi", hi_text, "upper lambda")->required();
  mx->add_option("--algorithm", mx_alg, "newton|scaling|megiddo|oracle")
      ->default_val("newton")
      ->check(CLI::IsMember({"newton", "scaling", "megiddo", "oracle"}));
  mx->add_option("--seed", seed, "random seed")->default_val(0);

  // envelope
  int samples = 101;
  std::string format;
  auto* env = app.add_subcommand("envelope", "Z along a ray segment, exact or sampled");
  env->add_option("file", ray_args.file, "instance file")->required();
  env->add_option("--from", ray_args.from, "ray origin mu0")->required();
  env->add_option("--dir", ray_args.dir, "integer direction nu")->required();
  env->add_option("--lo", lo_text, "lower lambda")->required();
  env->add_option("--hi", hi_text, "upper lambda")->required();
  env->add_option("--samples", samples, "CSV sample count")->default_val(101);
  env->add_option("--format", format, "json|csv")
      ->default_val("json")
      ->check(CLI::IsMember({"json", "csv"}));
  env->add_option("--algorithm", env_alg, "oracle|chain")
      ->default_val("oracle")
      ->check(CLI::IsMember({"oracle", "chain"}));

  // approx-cuts
  std::string alpha;
  std::string mode;
  auto* ac = app.add_subcommand("approx-cuts", "Cuts within a factor alpha of the minimum");
  ac->add_option("file", file, "instance file")->required();
  ac->add_option("--at", at, "parameter point mu")->required();
  ac->add_option("--alpha", alpha, "approximation factor >= 1")->required();
  ac->add_option("--mode", mode, "bruteforce|randomized|auto")
      ->default_val("auto")
      ->check(CLI::IsMember({"auto", "bruteforce", "randomized"}));
  ac->add_option("--seed", seed, "random seed")->default_val(0);

  // bench
  BenchConfig bench_cfg;
  std::string sizes = "50,100";
  std::string algorithms = "det,megiddo";
  auto* bench = app.add_subcommand("bench", "CSV timing and work report on random instances");
  bench->add_option("--sizes", sizes, "comma separated vertex counts")->default_val("50,100");
  bench->add_option("--density", bench_cfg.density, "edge density")->default_val(0.2);
  bench->add_option("--task", bench_cfg.task, "nb|max")
      ->default_val("nb")
      ->check(CLI::IsMember({"nb", "max"}));
  bench->add_option("--algorithms", algorithms, "comma separated algorithm names")
      ->default_val("det,megiddo");
  bench->add_option("--instances", bench_cfg.instances, "instances per size")->default_val(1);
  bench->add_option("--seed", bench_cfg.seed, "base seed")->default_val(0);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*mincut) {
      ParamGraph g = read_graph_file(file);
      auto mu = parse_rational_list(at);
      check_dimension(g, mu.size(), "--at");
      auto best = sw_mincut(g, mu);
      print({{"value", best.value.to_string()}, {"cut", cut_json(best.cut)}});
    } else if (*eval) {
      ParamGraph g = read_graph_file(file);
      auto mu = parse_rational_list(at);
      check_dimension(g, mu.size(), "--at");
      json out;
      if (!eval_cut.empty()) {
        std::vector<int> side;
        for (const auto& r : parse_rational_list(eval_cut)) {
          if (!r.is_integer() || r < Rational(1) || Rational(g.vertex_count()) < r) {
            throw ParseError("cut vertex out of range: " + r.to_string());
          }
          side.push_back(static_cast<int>(r.numerator().get_si()) - 1);
        }
        Cut c = Cut::from_side(g.vertex_count(), side);
        out["cut"] = cut_json(c);
        out["cost"] = cut_cost(g.costs_at(mu), c).to_string();
      } else {
        auto best = sw_mincut(g, mu);
        out["value"] = best.value.to_string();
        out["cut"] = cut_json(best.cut);
      }
      if (!eval_dir.empty()) {
        auto nu = parse_direction(eval_dir);
        check_dimension(g, nu.size(), "--dir");
        RayGraph ray = restrict_to_ray(g, mu, nu);
        if (admissible_side(ray, Rational(0), +1)) {
          auto s = one_sided_slope(ray, Rational(0), +1);
          out["slope_right"] = s.slope.to_string();
          out["witness_right"] = cut_json(s.witness);
        }
        if (admissible_side(ray, Rational(0), -1)) {
          auto s = one_sided_slope(ray, Rational(0), -1);
          out["slope_left"] = s.slope.to_string();
          out["witness_left"] = cut_json(s.witness);
        }
      }
      print(out);
    } else if (*nb) {
      ParamGraph g;
      RayGraph ray = load_ray(ray_args, g);
      std::optional<Rational> hi;
      if (!cap.empty()) hi = Rational::parse(cap);
      RayProblem p = make_ray_problem(std::move(ray), hi);
      BreakpointResult r;
      if (nb_alg == "det") {
        r = pnb_deterministic(p);
      } else if (nb_alg == "rand") {
        r = pnb_randomized(p, seed, Rational::parse(eta));
      } else if (nb_alg == "newton") {
        r = pnb_via_pmax(p);
      } else if (nb_alg == "megiddo") {
        r = megiddo_next_breakpoint(p);
      } else {
        r = oracle_pnb(p);
      }
      json out;
      out["found"] = r.found;
      out["algorithm"] = nb_alg;
      out["trials"] = r.trials;
      out["slope_before"] = r.slope_before.to_string();
      if (r.found) {
        out["lambda_nb"] = r.lambda_nb.to_string();
        out["mu_nb"] = rationals(r.mu_nb);
        out["witness_cut"] = cut_json(r.witness);
        out["slope_after"] = r.slope_after.to_string();
      } else {
        out["lambda_nb"] = nullptr;
        out["mu_nb"] = nullptr;
        out["witness_cut"] = nullptr;
        out["slope_after"] = nullptr;
      }
      print(out);
    } else if (*mx) {
      ParamGraph g;
      RayGraph ray = load_ray(ray_args, g);
      Rational lo = Rational::parse(lo_text);
      Rational hi = Rational::parse(hi_text);
      if (!(lo < hi)) throw ParseError("--lo must be smaller than --hi");
      MaxResult r;
      if (mx_alg == "newton") {
        r = pmax_newton(ray, lo, hi);
      } else if (mx_alg == "scaling") {
        r = pmax_scaling_1d(ray, lo, hi, nullptr, nullptr, seed);
      } else if (mx_alg == "megiddo") {
        r = megiddo_maximize(ray, lo, hi);
      } else {
        r = oracle_pmax(ray, lo, hi);
      }
      json witnesses = json::array();
      for (const auto& c : r.witnesses) witnesses.push_back(cut_json(c));
      print({{"lambda_star", r.lambda_star.to_string()},
             {"mu_star", rationals(r.mu_star)},
             {"z_star", r.z_star.to_string()},
             {"witnesses", witnesses},
             {"oracle_calls", r.oracle_calls},
             {"algorithm", mx_alg}});
    } else if (*env) {
      ParamGraph g;
      RayGraph ray = load_ray(ray_args, g);
      Rational lo = Rational::parse(lo_text);
      Rational hi = Rational::parse(hi_text);
      if (!(lo < hi)) throw ParseError("--lo must be smaller than --hi");
      PiecewiseLinearConcave z;
      if (env_alg == "oracle") {
        for (const auto& e : ray.graph.original_edges()) {
          if (e.cost.at(lo).sign() < 0 || e.cost.at(hi).sign() < 0) {
            throw DomainError("negative edge cost on the envelope domain");
          }
        }
        z = oracle_envelope(ray, lo, hi);
      } else {
        z = chained_envelope(ray, lo, hi);
      }
      if (format == "csv") {
        std::cout << envelope_to_csv(z, samples);
      } else {
        std::cout << json::parse(envelope_to_json(z)).dump(2) << '\n';
      }
    } else if (*ac) {
      ParamGraph g = read_graph_file(file);
      auto mu = parse_rational_list(at);
      check_dimension(g, mu.size(), "--at");
      ApproxMode m = mode == "bruteforce"   ? ApproxMode::bruteforce
                     : mode == "randomized" ? ApproxMode::randomized
                                            : ApproxMode::automatic;
      json out = json::array();
      for (const auto& c : approx_cuts(g, mu, Rational::parse(alpha), seed, m)) {
        out.push_back({{"cut", cut_json(c.cut)}, {"cost", c.cost.to_string()}});
      }
      print(out);
    } else if (*bench) {
      bench_cfg.sizes.clear();
      for (const auto& r : parse_rational_list(sizes)) {
        if (!r.is_integer() || r < Rational(2)) throw ParseError("bad size in --sizes");
        bench_cfg.sizes.push_back(static_cast<int>(r.numerator().get_si()));
      }
      bench_cfg.algorithms = CLI::detail::split(algorithms, ',');
      std::cout << bench_csv(run_bench(bench_cfg));
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 3;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
