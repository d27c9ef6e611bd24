#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " '" TORICA_BINARY "' " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& name) { return "'" TORICA_TEST_DATA "/" + name + "'"; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("bounds") {
  const Run r = run("bounds --r 2 --e 13");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "179"));
  CHECK(contains(r.out, "179/4"));
  const Run eval = run("bounds eval --r 1 --e 7");
  CHECK(eval.status == 0);
  CHECK(contains(eval.out, "9"));
  const Run low = run("bounds --r 1 --e 6");
  CHECK(low.status != 0);
}

TEST_CASE("bound surface csv") {
  const Run r = run("bounds surface --rmin 1 --rmax 20 --emin 13 --emax 100 --scaled");
  CHECK(r.status == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1761);
  CHECK(contains(r.out, "0.615384615385"));
}

TEST_CASE("bound claims report the failing grid") {
  const Run r = run("bounds claims");
  CHECK(r.status == 4);
  CHECK(contains(r.out, "5r^2 e"));
}

TEST_CASE("fan commands") {
  const Run info = run("fan info --fan " + data("p2.json"));
  CHECK(info.status == 0);
  CHECK(contains(info.out, "\"e\": 3"));
  const Run twelve = run("fan info --fan " + data("twelve_ray.json"));
  CHECK(twelve.status == 0);
  CHECK(contains(twelve.out, "\"e\": 12"));
  const Run bad = run("fan validate --fan " + data("bad_unimodular.json"));
  CHECK(bad.status == 2);
  CHECK(contains(bad.out, "NotUnimodular(4)"));
  const Run missing = run("fan validate --fan /nonexistent.json");
  CHECK(missing.status == 1);
}

TEST_CASE("divisor check") {
  const Run ok = run("divisor check --fan " + data("twelve_ray.json") + " --divisor " + data("twelve_ray_divisor.json"));
  CHECK(ok.status == 0);
  CHECK(contains(ok.out, "48"));
  const Run trivial = run("divisor check --fan " + data("p2.json") + " --divisor " + data("p2_trivial.json"));
  CHECK(trivial.status == 3);
}

TEST_CASE("adjoin") {
  const Run a = run("adjoin --fan " + data("p2.json") + " --divisor " + data("p2_o3.json"));
  CHECK(a.status == 0);
  CHECK(contains(a.out, "AntiCanonical"));
  const Run f = run("adjoin --fan " + data("f0.json") + " --divisor " + data("f0_23.json"));
  CHECK(f.status == 0);
  CHECK(contains(f.out, "Fibration"));
  const Run twelve = run("adjoin --fan " + data("twelve_ray.json") + " --divisor " + data("twelve_ray_divisor.json"));
  CHECK(twelve.status == 0);
  CHECK(contains(twelve.out, "Reduced"));
  const Run bad = run("adjoin --fan " + data("p2.json") + " --divisor " + data("p2_trivial.json"));
  CHECK(bad.status == 3);
}

TEST_CASE("bogomolov") {
  const Run s = run("bogomolov search --fan " + data("p2.json") + " --h " + data("p2_o4.json") + " --c2 3 --box 6");
  CHECK(s.status == 0);
  CHECK(contains(s.out, "candidates found"));
  const Run stable = run("bogomolov search --fan " + data("p2.json") + " --h " + data("p2_o4.json") + " --c2 4");
  CHECK(stable.status != 0);
  const Run r = run("bogomolov restrict --fan " + data("p2.json") + " --h " + data("p2_o4.json") + " --c2 3");
  CHECK(r.status == 0);
}

TEST_CASE("table1") {
  const Run r = run("table1");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "c2 >= 7 open"));
}

TEST_CASE("verify and enumerate") {
  const Run v1 = run("verify --emax 7 --amax 2 --tmax 3 --r 1,2,3", "TORICA_THREADS=1");
  const Run v3 = run("verify --emax 7 --amax 2 --tmax 3 --r 1,2,3", "TORICA_THREADS=3");
  CHECK(v1.status == 0);
  CHECK(v1.out == v3.out);
  CHECK(contains(v1.out, "\"counterexamples\": []"));
  const Run bad = run("verify --r 1,x");
  CHECK(bad.status == 1);
  const Run e = run("enumerate --emax 4 --amax 3");
  CHECK(e.status == 0);
  CHECK(contains(e.out, "\"surface_count\": 5"));
}

}  // TEST_SUITE
