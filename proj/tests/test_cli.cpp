#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + SPINCQ_CLI + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / ("spincq_cli_test_" + name); }

}  // namespace

TEST_CASE("orbits listing") {
  auto r = run("orbits --group su3 --box 4");
  CHECK(r.code == 0);
  CHECK(r.out.find("(3/2, 0)              su(2)   (1, 1)                pi(1, 1)") != std::string::npos);
  auto t = run("orbits --group torus:1 --box 2 --format csv");
  CHECK(t.code == 0);
  CHECK(t.out == "rep,levi,shift,qspin\n\"(-2)\",0,\"(-2)\",\"pi(-2)\"\n\"(-1)\",0,\"(-1)\",\"pi(-1)\"\n"
                 "\"(0)\",0,\"(0)\",\"pi(0)\"\n\"(1)\",0,\"(1)\",\"pi(1)\"\n\"(2)\",0,\"(2)\",\"pi(2)\"\n");
  auto a = run("orbits --group su3 --ancestors-of rho --format csv");
  CHECK(a.code == 0);
  CHECK(lines(a.out) == 5);
  auto j = nlohmann::json::parse(run("orbits --group su3 --ancestors-of rho --levi 'su(2)' --format json").out);
  CHECK(j.size() == 2);
  CHECK(run("orbits --group su3 --format dot --box 2").out.rfind("digraph", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(run("orbits --group sp4").code == 2);
  CHECK(run("index --example nope:1").code == 2);
  CHECK(run("qr --example p1:4 --box 1:0").code == 2);
  CHECK(run("qr --example p1:4 --format svg").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("orbits --group su3 --ancestors-of 3/2,0").code == 2);
  CHECK(run("--config /nonexistent/config.json").code == 2);
  CHECK(run("decompose --example hirzebruch:3,6").code == 3);
  CHECK(run("--help").code == 0);
}

TEST_CASE("qr subcommand") {
  auto r = run("qr --example p1:4 --box -10:10");
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 22);
  CHECK(r.out.rfind("mu1,m,q,match\n", 0) == 0);
  CHECK(r.out.find("false") == std::string::npos);
  CHECK(run("qr --example p1_deformed:4,15 --box -10:10").code == 0);
  CHECK(run("qr --example hirzebruch:3,6").code == 0);
}

TEST_CASE("index subcommand") {
  auto r = run("index --example su3_flag:4,1");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["coefficient_at_rho"] == -2);
  CHECK(j["group"] == "su3");
  auto csv = run("index --example p1:4 --box -1:5 --format csv");
  CHECK(csv.out == "mu1,mult\n-1,0\n0,1\n1,1\n2,1\n3,1\n4,1\n5,0\n");
}

TEST_CASE("dh and moment subcommands") {
  auto r = run("dh --example hirzebruch:3,6 --grid -5:3:0.25");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("P2\n", 0) == 0);
  CHECK(r.out.find(" 0 ") != std::string::npos);
  CHECK(r.out.find("255") != std::string::npos);
  CHECK(run("dh --example hirzebruch:3,6 --grid -5:3:0.25 --format svg").out.find("<svg") != std::string::npos);
  auto m = nlohmann::json::parse(run("moment --example su3_flag:4,1").out);
  CHECK(m.size() == 2);
}

TEST_CASE("determinism and thread independence") {
  auto a = run("qr --example hirzebruch:3,6 --format table");
  auto b = run("qr --example hirzebruch:3,6 --format table", "SPINCQ_THREADS=4");
  CHECK(a.out == b.out);
  auto c = run("index --example hirzebruch:3,6 --format csv");
  auto d = run("index --example hirzebruch:3,6 --format csv", "SPINCQ_THREADS=3");
  CHECK(c.out == d.out);
  CHECK(run("magic --group su3 --pairs 300 --seed 9").out == run("magic --group su3 --pairs 300 --seed 9").out);
  CHECK(run("dh --example hirzebruch:3,6 --grid -5:3:0.5").out ==
        run("dh --example hirzebruch:3,6 --grid -5:3:0.5", "SPINCQ_THREADS=2").out);
}

TEST_CASE("config file and output path") {
  auto cfg = temp_file("config.json");
  auto out = temp_file("out.csv");
  {
    std::ofstream f(cfg);
    f << R"({"subcommand": "qr", "example": "p1:4", "box": "-10:10", "output": ")" << out.string() << "\"}";
  }
  auto r = run("--config " + cfg.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == run("qr --example p1:4 --box -10:10").out);
  CHECK(run("index --config " + cfg.string()).code == 2);
  // flags on the command line override the file
  auto p = run("qr --config " + cfg.string() + " --box -1:1 --output " + temp_file("small.csv").string());
  CHECK(p.code == 0);
  std::ifstream small(temp_file("small.csv"));
  std::stringstream s2;
  s2 << small.rdbuf();
  CHECK(lines(s2.str()) == 4);
  fs::remove(cfg);
  fs::remove(out);
  fs::remove(temp_file("small.csv"));
}

TEST_CASE("magic subcommand") {
  auto r = run("magic --group u2 --pairs 500 --seed 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("counterexamples 0") != std::string::npos);
}
