#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + PARACUT_BIN + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fx(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

json run_json(const std::string& args) {
  Run r = run(args);
  INFO(args);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

struct Fixture {
  const char* file;
  const char* hi;
};

const Fixture kFixtures[] = {
    {"t1.pgmc", "2"},           {"p3.pgmc", "4"},           {"k2.pgmc", "3"},
    {"star.pgmc", "3"},         {"unique_cut_a.pgmc", "4"},     {"unique_cut_b.pgmc", "4"},
    {"unique_cut_c.pgmc", "4"},
};

}  // namespace

TEST_CASE("mincut and eval") {
  auto m = run_json("mincut " + fx("t1.pgmc") + " --at 0");
  CHECK(m["value"] == "1");
  CHECK(m["cut"] == json::array({2}));
  CHECK(run_json("mincut " + fx("t1.pgmc") + " --at 1/2")["value"] == "3/2");

  auto e = run_json("eval " + fx("t1.pgmc") + " --at 1 --dir 1");
  CHECK(e["value"] == "2");
  CHECK(e["slope_right"] == "-1");
  CHECK(e["slope_left"] == "1");
  CHECK(run_json("eval " + fx("t1.pgmc") + " --at 0 --cut 1")["cost"] == "2");
  CHECK(run_json("mincut " + fx("d2.pgmc") + " --at 1,1")["value"] == "2");
}

TEST_CASE("next-breakpoint examples") {
  auto t = run_json("next-breakpoint " + fx("t1.pgmc") + " --from 0 --dir 1");
  CHECK(t["found"] == true);
  CHECK(t["lambda_nb"] == "1");
  CHECK(t["mu_nb"] == json::array({"1"}));
  CHECK(t["slope_before"] == "1");
  CHECK(t["slope_after"] == "-1");
  CHECK(t["witness_cut"] == json::array({3}));

  auto k = run_json("next-breakpoint " + fx("k2.pgmc") + " --from 0 --dir 1");
  CHECK(k["found"] == false);
  CHECK(k["lambda_nb"].is_null());

  auto capped = run_json("next-breakpoint " + fx("t1.pgmc") + " --from 0 --dir 1 --hi 1/2");
  CHECK(capped["found"] == false);

  auto d2 = run_json("next-breakpoint " + fx("d2.pgmc") + " --from 0,0 --dir 1,1");
  auto d2o = run_json("next-breakpoint " + fx("d2.pgmc") + " --from 0,0 --dir 1,1 --algorithm oracle");
  CHECK(d2["found"] == d2o["found"]);
  CHECK(d2["lambda_nb"] == d2o["lambda_nb"]);

  // Different seeds may take different paths but land on the same point.
  auto r1 = run_json("next-breakpoint " + fx("unique_cut_a.pgmc") + " --from 0 --dir 1 --algorithm rand --seed 1");
  auto r2 = run_json("next-breakpoint " + fx("unique_cut_a.pgmc") + " --from 0 --dir 1 --algorithm rand --seed 2");
  CHECK(r1["lambda_nb"] == r2["lambda_nb"]);
}

TEST_CASE("every algorithm agrees with the oracle on the fixtures") {
  for (const auto& f : kFixtures) {
    const std::string ray = fx(f.file) + " --from 0 --dir 1";
    const std::string cap = std::string(" --hi ") + f.hi;
    auto o = run_json("next-breakpoint " + ray + cap + " --algorithm oracle");
    for (const char* alg : {"det", "rand", "newton", "megiddo"}) {
      INFO(f.file << " " << alg);
      auto r = run_json("next-breakpoint " + ray + cap + " --algorithm " + alg);
      CHECK(r["found"] == o["found"]);
      CHECK(r["lambda_nb"] == o["lambda_nb"]);
      CHECK(r["slope_after"] == o["slope_after"]);
    }
    const std::string seg = ray + " --lo 0 --hi " + f.hi;
    auto om = run_json("maximize " + seg + " --algorithm oracle");
    for (const char* alg : {"newton", "scaling", "megiddo"}) {
      INFO(f.file << " " << alg);
      auto r = run_json("maximize " + seg + " --algorithm " + alg);
      CHECK(r["lambda_star"] == om["lambda_star"]);
      CHECK(r["z_star"] == om["z_star"]);
    }
    auto eo = run_json("envelope " + seg);
    auto ec = run_json("envelope " + seg + " --algorithm chain");
    CHECK(eo == ec);
  }
}

TEST_CASE("maximize, envelope and approx-cuts output") {
  auto s = run_json("maximize " + fx("star.pgmc") + " --from 0 --dir 1 --lo 0 --hi 3");
  CHECK(s["lambda_star"] == "1");
  CHECK(s["z_star"] == "2");
  CHECK(s["mu_star"] == json::array({"1"}));

  auto e = run_json("envelope " + fx("t1.pgmc") + " --from 0 --dir 1 --lo 0 --hi 2");
  CHECK(e["pieces"].size() == 2);
  Run csv = run("envelope " + fx("t1.pgmc") + " --from 0 --dir 1 --lo 0 --hi 2 --format csv --samples 5");
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("lambda,value\n", 0) == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 6);

  auto a = run_json("approx-cuts " + fx("t1.pgmc") + " --at 0 --alpha 2");
  CHECK(a.size() == 2);
  auto b = run_json("approx-cuts " + fx("unique_cut_b.pgmc") + " --at 1/2 --alpha 13/10 --mode bruteforce");
  auto c = run_json("approx-cuts " + fx("unique_cut_b.pgmc") + " --at 1/2 --alpha 13/10 --mode randomized");
  CHECK(b == c);
}

TEST_CASE("bench smoke run") {
  Run r = run("bench --sizes 8 --algorithms det,megiddo,oracle --seed 3");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("instance,n,m,task,algorithm,wall_ms,sw_equivalents,", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
  Run mx = run("bench --sizes 8 --task max --algorithms newton,scaling");
  CHECK(mx.code == 0);
  CHECK(std::count(mx.out.begin(), mx.out.end(), '\n') == 3);
}

TEST_CASE("exit codes") {
  CHECK(run("--help").code == 0);
  CHECK(run("").code == 2);
  CHECK(run("mincut " + fx("bad_selfloop.pgmc") + " --at 0").code == 2);
  CHECK(run("mincut " + fx("bad_arity.pgmc") + " --at 0").code == 2);
  CHECK(run("mincut " + fx("bad_order.pgmc") + " --at 0").code == 2);
  CHECK(run("mincut " + fx("missing.pgmc") + " --at 0").code == 2);
  CHECK(run("mincut " + fx("t1.pgmc") + " --at 0,1").code == 2);
  CHECK(run("mincut " + fx("t1.pgmc") + " --at x").code == 2);
  CHECK(run("next-breakpoint " + fx("t1.pgmc") + " --from 0 --dir 0").code == 2);
  CHECK(run("next-breakpoint " + fx("t1.pgmc") + " --from 0 --dir 1 --algorithm nope").code == 2);
  CHECK(run("maximize " + fx("t1.pgmc") + " --from 0 --dir 1 --lo 2 --hi 1").code == 2);

  CHECK(run("mincut " + fx("t1.pgmc") + " --at 3").code == 3);
  CHECK(run("maximize " + fx("t1.pgmc") + " --from 0 --dir 1 --lo 0 --hi 3").code == 3);
  CHECK(run("next-breakpoint " + fx("t1.pgmc") + " --from 3 --dir 1").code == 3);
  CHECK(run("approx-cuts " + fx("t1.pgmc") + " --at 3 --alpha 1").code == 3);

  const std::string big = "next-breakpoint " + fx("path17.pgmc") + " --from 0 --dir 1";
  CHECK(run(big + " --algorithm oracle").code == 4);
  CHECK(run(big + " --algorithm oracle", "PARACUT_ORACLE_MAX_N=17").code == 0);
  CHECK(run(big).code == 0);
}
