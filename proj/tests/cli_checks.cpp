// End-to-end checks of the CLI surface: exit codes, error wording, output
// determinism, and the documented report fields.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <string>
#include <sys/wait.h>

#ifndef QUOTBN_CLI_PATH
#define QUOTBN_CLI_PATH "quotbn"
#endif

namespace {

struct RunResult {
  int code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  RunResult r;
  std::string cmd = std::string(QUOTBN_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, n);
  int status = pclose(pipe);
  if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
  return r;
}

}  // namespace

TEST_CASE("class command reports the genus-1 anchor") {
  RunResult r = run_cli("class --genus 1 --degree 4 --segre 0");
  CHECK(r.code == 0);
  CHECK(r.output.find("codimension: 1") != std::string::npos);
  CHECK(r.output.find("pushforward=8") != std::string::npos);
  CHECK(r.output.find("-6*t1 + u1 + s1_1*s1_2") != std::string::npos);
  CHECK(r.output.find("existence: NonEmpty") != std::string::npos);
}

TEST_CASE("parity violations exit with the parameter code and the rule") {
  RunResult r = run_cli("class --genus 1 --degree 4 --segre 1");
  CHECK(r.code == 2);
  CHECK(r.output.find("s = d (mod 2)") != std::string::npos);
}

TEST_CASE("empty stratum above the genus is reported, not an error") {
  RunResult r = run_cli("class --genus 2 --degree 7 --segre 3");
  CHECK(r.code == 0);
  CHECK(r.output.find("existence: Empty") != std::string::npos);
  CHECK(r.output.find("class: not computed") != std::string::npos);
}

TEST_CASE("genus 0 is redirected to the lab") {
  RunResult r = run_cli("class --genus 0 --degree 4 --segre 0");
  CHECK(r.code == 2);
  CHECK(r.output.find("lab") != std::string::npos);
}

TEST_CASE("unknown flags are rejected") {
  RunResult r = run_cli("class --genus 1 --degree 4 --segre 0 --bogus 3");
  CHECK(r.code == 2);
}

TEST_CASE("survey output is deterministic and balanced-dominated") {
  RunResult a = run_cli("lab survey --degree 4 --trials 100 --seed 7");
  RunResult b = run_cli("lab survey --degree 4 --trials 100 --seed 7");
  CHECK(a.code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("(2,2): 100") != std::string::npos);

  RunResult c = run_cli("lab survey --degree 3 --trials 100 --seed 7");
  CHECK(c.output.find("(1,2): 100") != std::string::npos);
}

TEST_CASE("survey respects the degree cap") {
  RunResult r = run_cli("lab survey --degree 13 --trials 10 --seed 1");
  CHECK(r.code == 2);
}

TEST_CASE("parallel survey matches the sequential table") {
  RunResult a = run_cli("lab survey --degree 5 --trials 60 --seed 3");
  RunResult b = run_cli("lab survey --degree 5 --trials 60 --seed 3 --jobs 4");
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("lab dim exposes the balanced off-by-one") {
  RunResult agree = run_cli("lab dim --degree 3 --a 1");
  CHECK(agree.code == 0);
  CHECK(agree.output.find("formula: 16") != std::string::npos);
  CHECK(agree.output.find("lab: 16") != std::string::npos);
  CHECK(agree.output.find("agree: true") != std::string::npos);

  RunResult off = run_cli("lab dim --degree 2 --a 1");
  CHECK(off.output.find("formula: 13") != std::string::npos);
  CHECK(off.output.find("lab: 12") != std::string::npos);
  CHECK(off.output.find("agree: false") != std::string::npos);
}

TEST_CASE("lab sample emits a valid matrix with its splitting") {
  RunResult r = run_cli("lab sample --degree 3 --seed 5 --format json");
  CHECK(r.code == 0);
  CHECK(r.output.find("\"col_degrees\"") != std::string::npos);
  CHECK(r.output.find("\"splitting\"") != std::string::npos);
  RunResult again = run_cli("lab sample --degree 3 --seed 5 --format json");
  CHECK(r.output == again.output);
}

TEST_CASE("json report key order is stable") {
  RunResult a = run_cli("class --genus 2 --degree 8 --segre 0 --format json");
  RunResult b = run_cli("class --genus 2 --degree 8 --segre 0 --format json");
  CHECK(a.code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("\"params\"") < a.output.find("\"codim\""));
  CHECK(a.output.find("\"discrepancies\"") != std::string::npos);
}
