#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(FERREX_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("eval prints 16 significant digits") {
  RunResult r = run_cli("eval --fn ferrers_p --nu 1 --mu -1 --x 0.6");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "4.000000000000000e-1\n");
  RunResult g = run_cli("eval --fn gegenbauer --n 3 --lambda 1 --x 1");
  CHECK(g.exit_code == 0);
  CHECK(g.out == "4.000000000000000e0\n");
}

TEST_CASE("eval error contract") {
  RunResult r = run_cli("eval --fn ferrers_p --nu 1 --mu 0 --x 1.5");
  CHECK(r.exit_code == 1);
  CHECK(r.out == "DomainError\n");
  CHECK(run_cli("eval --fn nosuch --x 0.5").exit_code == 2);
  CHECK(run_cli("eval --fn ferrers_p --nu 1").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("table csv with endpoint clamping") {
  RunResult r = run_cli("table --fn legendre_p --n 2 --x-grid -1:1:0.5");
  CHECK(r.exit_code == 0);
  std::vector<std::string> lines;
  std::string cur;
  for (char c : r.out) {
    if (c == '\n') { lines.push_back(cur); cur.clear(); }
    else cur += c;
  }
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "x,value");
  // middle row x = 0, P_2(0) = -1/2
  CHECK(lines[3] == "0,-5.000000000000000e-1");
  // endpoints clamped inward: P_2 just below 1
  double v = std::strtod(lines[5].substr(lines[5].find(',') + 1).c_str(),
                         nullptr);
  CHECK(v == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("table json format") {
  RunResult r = run_cli(
      "table --fn chebyshev_t --n 1 --x-grid 0:0.4:0.2 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"x\"") != std::string::npos);
  CHECK(r.out.find("\"value\"") != std::string::npos);
  CHECK(r.out.find("0.2") != std::string::npos);
}

TEST_CASE("table grid validation") {
  CHECK(run_cli("table --fn legendre_p --n 2 --x-grid 0.5:0.1:0.2")
            .exit_code == 2);
  CHECK(run_cli("table --fn legendre_p --n 2 --x-grid 0:1:-0.5").exit_code ==
        2);
  CHECK(run_cli("table --fn legendre_p --n 2 --x-grid junk").exit_code == 2);
}

TEST_CASE("verify exit codes") {
  CHECK(run_cli("verify --suite bogus").exit_code == 2);
  RunResult r = run_cli("verify --suite sobolev");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"check_name\"") != std::string::npos);
  CHECK(r.out.find("\"passed\": true") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  std::string a =
      run_cli("eval --fn gauss_2f1 --a 0.3 --b 1.7 --c 2.2 --x 0.65").out;
  std::string b =
      run_cli("eval --fn gauss_2f1 --a 0.3 --b 1.7 --c 2.2 --x 0.65").out;
  CHECK(a == b);
  CHECK(std::stod(a) == doctest::Approx(1.2524400547796691).epsilon(1e-12));
}
