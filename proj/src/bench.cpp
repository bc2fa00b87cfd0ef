#include "paracut/bench.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "paracut/instance_gen.hpp"
#include "paracut/megiddo.hpp"
#include "paracut/next_breakpoint.hpp"
#include "paracut/oracle.hpp"
#include "paracut/pmax.hpp"

namespace paracut {

namespace {

std::string nb_text(const BreakpointResult& r) {
  return r.found ? r.lambda_nb.to_string() : "none";
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  if (config.task != "nb" && config.task != "max") {
    throw std::invalid_argument("bench task must be nb or max");
  }
  std::vector<BenchRow> rows;
  for (int n : config.sizes) {
    for (int inst = 0; inst < config.instances; ++inst) {
      InstanceParams params;
      params.n = n;
      params.m = static_cast<int>(config.density * n * (n - 1) / 2.0 + 0.5);
      params.lambda_target = config.lambda_target;
      params.seed = config.seed + static_cast<std::uint64_t>(inst) * 7919 +
                    static_cast<std::uint64_t>(n);
      ParamGraph graph = random_instance(params);
      RayGraph ray = restrict_to_ray(graph, {Rational(0)}, {BigInt(1)});
      const Rational hi(config.lambda_target);
      std::optional<RayProblem> problem;
      if (config.task == "nb") problem = make_ray_problem(ray, hi);

      for (const auto& alg : config.algorithms) {
        BenchRow row;
        row.instance = inst;
        row.n = n;
        row.m = ray.edge_count();
        row.task = config.task;
        row.algorithm = alg;
        auto start = std::chrono::steady_clock::now();
        if (config.task == "nb") {
          const RayProblem& p = *problem;
          if (alg == "det") {
            row.result = nb_text(pnb_deterministic(p, &row.stats));
          } else if (alg == "rand") {
            row.result = nb_text(pnb_randomized(p, config.seed, Rational(1, 100), &row.stats));
          } else if (alg == "via-pmax") {
            row.result = nb_text(pnb_via_pmax(p, &row.stats));
          } else if (alg == "megiddo") {
            row.result = nb_text(megiddo_next_breakpoint(p, &row.stats));
          } else if (alg == "oracle") {
            row.result = nb_text(oracle_pnb(p));
          } else {
            throw std::invalid_argument("unknown bench algorithm: " + alg);
          }
        } else {
          MaxResult r;
          if (alg == "newton") {
            r = pmax_newton(ray, Rational(0), hi, &row.stats);
          } else if (alg == "scaling") {
            r = pmax_scaling_1d(ray, Rational(0), hi, &row.stats, nullptr, config.seed);
          } else if (alg == "megiddo") {
            r = megiddo_maximize(ray, Rational(0), hi, &row.stats);
          } else if (alg == "oracle") {
            r = oracle_pmax(ray, Rational(0), hi);
          } else {
            throw std::invalid_argument("unknown bench algorithm: " + alg);
          }
          row.result = r.lambda_star.to_string();
        }
        auto stop = std::chrono::steady_clock::now();
        row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        row.sw_equivalents =
            n > 1 ? static_cast<double>(row.stats.ma_orderings) / (n - 1) : 0.0;
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "instance,n,m,task,algorithm,wall_ms,sw_equivalents,ma_orderings,sw_runs,"
        "oracle_calls,parametric_tests,result\n";
  for (const auto& r : rows) {
    os << r.instance << ',' << r.n << ',' << r.m << ',' << r.task << ',' << r.algorithm << ','
       << r.wall_ms << ',' << r.sw_equivalents << ',' << r.stats.ma_orderings << ','
       << r.stats.sw_runs << ',' << r.stats.oracle_calls << ',' << r.stats.parametric_tests
       << ',' << r.result << '\n';
  }
  return os.str();
}

}  // namespace paracut
