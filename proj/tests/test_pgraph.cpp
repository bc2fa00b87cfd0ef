#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "paracut/errors.hpp"
#include "paracut/graph_io.hpp"
#include "paracut/oracle.hpp"

using namespace paracut;
using testing::R;

namespace {

ParamGraph pg(int n, int d, std::vector<std::tuple<int, int, std::vector<long>>> es) {
  std::vector<Multigraph<CostVector>::Edge> edges;
  for (auto& [u, v, c] : es) {
    CostVector cv;
    for (long x : c) cv.coeffs.push_back(BigInt(x));
    edges.push_back({u - 1, v - 1, cv});
  }
  return ParamGraph(n, d, edges);
}

Cut side(int n, std::vector<int> one_based) {
  for (int& v : one_based) --v;
  return Cut::from_side(n, one_based);
}

}  // namespace

TEST_CASE("restrict_to_ray") {
  auto t1 = pg(3, 1, {{1, 2, {0, 1}}, {2, 3, {1, 0}}, {1, 3, {2, -1}}});
  auto ray = restrict_to_ray(t1, {R(0)}, {BigInt(1)});
  const auto& e = ray.graph.original_edges();
  REQUIRE(e.size() == 3);
  CHECK(e[0].cost == AffineLine{R(0), R(1)});   // 1-2
  CHECK(e[1].cost == AffineLine{R(2), R(-1)});  // 1-3
  CHECK(e[2].cost == AffineLine{R(1), R(0)});   // 2-3

  auto a = pg(2, 2, {{1, 2, {1, 2, 3}}});
  CHECK(restrict_to_ray(a, {R(0), R(0)}, {BigInt(1), BigInt(1)}).graph.original_edges()[0].cost ==
        AffineLine{R(1), R(5)});
  auto b = pg(2, 2, {{1, 2, {4, 1, -1}}});
  CHECK(restrict_to_ray(b, {R(1), R(1)}, {BigInt(1), BigInt(-1)}).graph.original_edges()[0].cost ==
        AffineLine{R(4), R(2)});
  CHECK_THROWS(restrict_to_ray(b, {R(1)}, {BigInt(1), BigInt(1)}));
}

TEST_CASE("restriction agrees with direct evaluation") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::tuple<int, int, std::vector<long>>> es;
    for (int u = 1; u <= 4; ++u) {
      for (int v = u + 1; v <= 4; ++v) es.push_back({u, v, {c(rng), c(rng), c(rng)}});
    }
    auto g = pg(4, 2, es);
    std::vector<Rational> mu0{testing::random_rational(rng, -3, 3),
                              testing::random_rational(rng, -3, 3)};
    std::vector<BigInt> nu{BigInt(c(rng)), BigInt(c(rng))};
    auto ray = restrict_to_ray(g, mu0, nu);
    Rational lambda = testing::random_rational(rng, -5, 5);
    auto direct = g.costs_at(ray.point(lambda));
    auto via_ray = ray.costs_at(lambda);
    for (std::size_t i = 0; i < direct.original_edges().size(); ++i) {
      CHECK(direct.original_edges()[i].cost == via_ray.original_edges()[i].cost);
    }
  }
}

TEST_CASE("contraction") {
  auto t1 = testing::t1();
  auto g = contract(t1.graph, 0, 1);
  CHECK(g.live_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.neighbors(0).at(2) == AffineLine{R(3), R(-1)});
  CHECK(t1.graph.live_count() == 3);  // the input is untouched

  auto p = contract(testing::p3().graph, 1, 2);
  CHECK(p.edge_count() == 1);
  CHECK(p.neighbors(0).at(1) == AffineLine{R(1), R(2)});

  CHECK_THROWS(contract(t1.graph, 0, 0));
  CHECK_THROWS(contract(g, 1, 2));  // 1 is dead
}

TEST_CASE("cut cost") {
  auto t1 = testing::t1();
  CHECK(cut_cost(t1, side(3, {2})) == AffineLine{R(1), R(1)});
  CHECK(cut_cost(t1, side(3, {1})) == AffineLine{R(2), R(0)});
  CHECK_THROWS(side(3, {1, 2, 3}));
  CHECK_THROWS(side(3, {}));
  CHECK(side(3, {1}) == side(3, {2, 3}));
  CHECK(to_string(side(3, {1})) == "{2,3}");
}

TEST_CASE("expand_cut") {
  auto t1 = testing::t1();
  auto g = contract(t1.graph, 0, 1);
  std::vector<int> merged{0};
  CHECK(expand_cut(g, std::span<const int>(merged)) == side(3, {3}));
  std::vector<int> third{2};
  CHECK(expand_cut(t1.graph, std::span<const int>(third)) == side(3, {3}));
  std::vector<int> all{0, 2};
  CHECK_THROWS(expand_cut(g, std::span<const int>(all)));
}

TEST_CASE("contraction preserves the cost of every minor cut") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    auto inst = testing::corpus_instance(1000 + trial, 4, 8);
    auto g = inst.ray.graph;
    std::uniform_int_distribution<int> steps(1, g.original_count() - 2);
    int k = steps(rng);
    for (int s = 0; s < k; ++s) {
      auto live = g.live_vertices();
      std::uniform_int_distribution<std::size_t> pick(0, live.size() - 1);
      std::size_t i = pick(rng);
      std::size_t j = pick(rng);
      if (i == j) j = (j + 1) % live.size();
      g.contract_in_place(live[i], live[j]);
    }
    auto live = g.live_vertices();
    const std::size_t L = live.size();
    Rational lambda = testing::random_rational(rng, 0, 4);
    Rational z = oracle_envelope(inst.ray, R(0), R(4)).value(lambda);
    for (std::uint32_t mask = 1; mask < (1U << (L - 1)); ++mask) {
      std::vector<int> s;
      AffineLine minor{};
      for (std::size_t a = 0; a < L; ++a) {
        bool in_a = a > 0 && (mask >> (a - 1) & 1U);
        if (in_a) s.push_back(live[a]);
        for (const auto& [t, c] : g.neighbors(live[a])) {
          std::size_t b = std::find(live.begin(), live.end(), t) - live.begin();
          bool in_b = b > 0 && (mask >> (b - 1) & 1U);
          if (in_a && !in_b) minor += c;
        }
      }
      Cut c = expand_cut(g, std::span<const int>(s));
      CHECK(minor == cut_cost(inst.ray, c));
      CHECK(z <= minor.at(lambda));
    }
  }
}

TEST_CASE("graph file parsing") {
  auto g = parse_graph("p pgmc 3 3 1\ne 1 2 0 1\ne 2 3 1 0\ne 1 3 2 -1\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.d == 1);
  CHECK(g.edge_count() == 3);

  auto dup = parse_graph("# comment\np pgmc 2 2 1\ne 1 2 0 1\ne 1 2 0 1  # again\n");
  REQUIRE(dup.edge_count() == 1);
  CHECK(dup.graph.original_edges()[0].cost.coeffs == std::vector<BigInt>{0, 2});

  CHECK_THROWS_AS(parse_graph("p pgmc 2 1 1\ne 1 1 5 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p pgmc 2 1 1\ne 1 3 5 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p pgmc 2 1 1\ne 1 2 5\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("e 1 2 5 0\np pgmc 2 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p pgmc 2 2 1\ne 1 2 5 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p pgmc 2 1 1\np pgmc 2 1 1\ne 1 2 5 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p pgmc 2 1 1\ne 1 2 x 0\n"), ParseError);
}

TEST_CASE("serialization round trip") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto inst = testing::corpus_instance(seed);
    std::string text = serialize_graph(inst.graph);
    auto again = parse_graph(text);
    CHECK(serialize_graph(again) == text);
    CHECK(again.edge_count() == inst.graph.edge_count());
  }
}
