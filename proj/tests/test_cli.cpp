#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#ifndef FPLOC_CLI_PATH
#error "FPLOC_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_shell(const std::string& cmd) {
  std::array<char, 4096> buf{};
  RunResult result;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) result.output += buf.data();
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

RunResult run_cli(const std::string& args) {
  return run_shell(std::string(FPLOC_CLI_PATH) + " " + args);
}

}  // namespace

TEST_CASE("compute examples") {
  RunResult r = run_cli("compute --builtin cpn:2 --class e");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "3\n");

  r = run_cli("compute --builtin cpn:2 --class p1");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "3\n");

  r = run_cli("compute --builtin s2_rotation --class 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "0 (degree < q)\n");
}

TEST_CASE("compute exit codes") {
  CHECK(run_cli("compute --builtin cpn:2 --class 'p0'").exit_code == 2);
  CHECK(run_cli("compute --builtin nope --class e").exit_code == 2);
  CHECK(run_cli("compute --builtin cpn:2").exit_code == 2);           // missing --class
  CHECK(run_cli("compute --class e").exit_code == 2);                 // missing source
  CHECK(run_cli("compute --builtin hopf_flow:2,3 --class 1").exit_code == 3);
}

TEST_CASE("verify examples") {
  RunResult r = run_cli("verify --builtin cpn:2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("all pass") != std::string::npos);

  r = run_cli("verify --builtin s2_rotation --max-degree 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("e^2") != std::string::npos);

  std::string broken_path = std::string(FPLOC_CLI_PATH) + "_broken_model.json";
  {
    std::ofstream out(broken_path);
    out << R"({ "name": "broken", "k": 1, "q": 2, "components": [
      { "id": "N", "c": "1", "epsilon": 1, "weights": [[1]] } ] })";
  }
  r = run_cli("verify --model " + broken_path);
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("not a polynomial") != std::string::npos);
  std::remove(broken_path.c_str());
}

TEST_CASE("model documents round trip through stdin") {
  const std::string doc =
      R"({ "name": "sphere", "k": 1, "q": 2, "components": [)"
      R"( { "id": "N", "c": "1", "epsilon": 1, "weights": [[1]] },)"
      R"( { "id": "S", "c": "1", "epsilon": 1, "weights": [[-1]] } ] })";
  RunResult r = run_shell("printf '%s' '" + doc + "' | " + FPLOC_CLI_PATH +
                          " compute --model - --class e");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "2\n");
}

TEST_CASE("catalog lists the builtins") {
  RunResult r = run_cli("catalog");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("s2_rotation") != std::string::npos);
  CHECK(r.output.find("cpn") != std::string::npos);
  CHECK(r.output.find("hopf_flow") != std::string::npos);
  CHECK(r.output.find("chi = 2") != std::string::npos);
}

TEST_CASE("numcheck subcommand") {
  RunResult r = run_cli("numcheck --builtin cpn:2 --class p1 --trials 10 --seed 5");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("all checks pass") != std::string::npos);

  CHECK(run_cli("numcheck --builtin cpn:2 --class p1 --tolerance 1e-30").exit_code == 3);
  CHECK(run_cli("numcheck --builtin cpn:2 --class p1 --trials 0").exit_code == 2);
}

TEST_CASE("identical invocations produce identical bytes") {
  const std::string cmd = "numcheck --builtin cpn:1 --class e --trials 25 --seed 777";
  RunResult a = run_cli(cmd);
  RunResult b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);

  RunResult c = run_cli("verify --builtin cpn:2 --format structured");
  RunResult d = run_cli("verify --builtin cpn:2 --format structured");
  CHECK(c.output == d.output);
  CHECK(c.output.find("\"all_pass\": true") != std::string::npos);
}
