#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "paracut/mincut_sw.hpp"

namespace paracut {

struct BenchConfig {
  std::vector<int> sizes{50, 100};
  double density = 0.2;  // fraction of all vertex pairs that carry an edge
  std::string task = "nb";  // nb or max
  std::vector<std::string> algorithms{"det", "megiddo"};
  long long lambda_target = 4;
  int instances = 1;
  std::uint64_t seed = 0;
};

struct BenchRow {
  int instance = 0;
  int n = 0;
  std::size_t m = 0;
  std::string task;
  std::string algorithm;
  double wall_ms = 0;
  double sw_equivalents = 0;  // MA orderings / (n - 1)
  WorkStats stats;
  std::string result;  // breakpoint or maximizer, "none" if absent
};

// Algorithms: det, rand, via-pmax, megiddo, oracle for nb; newton, scaling,
// megiddo, oracle for max.
std::vector<BenchRow> run_bench(const BenchConfig& config);
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace paracut
