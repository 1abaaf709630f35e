#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef JJA_CLI_PATH
#define JJA_CLI_PATH "jjalg"
#endif
#ifndef JJA_DATA_DIR
#define JJA_DATA_DIR "."
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(JJA_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

std::string data(const std::string& name) { return std::string(JJA_DATA_DIR) + "/" + name; }

nlohmann::json parse(const std::string& s) { return nlohmann::json::parse(s); }

}  // namespace

TEST_CASE("verify: exit 0 on stock algebras, 1 on axiom failures, 2 on garbage") {
  CHECK(run_cli("verify " + data("heisenberg_f5.json")).exit_code == 0);
  CHECK(run_cli("verify " + data("heisenberg.json")).exit_code == 0);

  RunResult bad = run_cli("verify " + data("not_jacobi.json"));
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("jacobi: FAIL") != std::string::npos);

  CHECK(run_cli("verify " + data("subalg_e3.json")).exit_code == 2);
  CHECK(run_cli("verify no_such_file.json").exit_code == 2);
}

TEST_CASE("verify --output json is machine readable") {
  RunResult res = run_cli("--output json verify " + data("heisenberg_f5.json"));
  CHECK(res.exit_code == 0);
  auto j = parse(res.out);
  CHECK(j["command"] == "verify");
  CHECK(j["report"]["pass"] == true);
}

TEST_CASE("field reinterpretation") {
  RunResult res = run_cli("--output json --field F7 verify " + data("heisenberg.json"));
  CHECK(res.exit_code == 0);
  RunResult bad = run_cli("--field F4 verify " + data("heisenberg.json"));
  CHECK(bad.exit_code == 2);
  // global options may trail the subcommand
  RunResult trailing = run_cli("classify h2 " + data("heisenberg.json") +
                               " --field F5 --output json");
  CHECK(trailing.exit_code == 0);
  CHECK(parse(trailing.out)["data_count"] == 125);
}

TEST_CASE("product flag builds the extension and verifies it") {
  RunResult res = run_cli("--output json product flag " + data("flag_beta1_h3_f5.json"));
  CHECK(res.exit_code == 0);
  auto j = parse(res.out);
  CHECK(j["check"]["pass"] == true);
  CHECK(j["verify"]["pass"] == true);
  CHECK(j["algebra"]["dim"] == 4);
}

TEST_CASE("product bicrossed on the trivial pair") {
  RunResult res = run_cli("--output json product bicrossed " + data("pair_trivial_h3_f5.json"));
  CHECK(res.exit_code == 0);
  auto j = parse(res.out);
  CHECK(j["algebra"]["dim"] == 4);
}

TEST_CASE("check flag prints per-condition verdicts") {
  RunResult res = run_cli("--output json check flag " + data("flag_beta1_h3_f5.json"));
  CHECK(res.exit_code == 0);
  auto j = parse(res.out);
  CHECK(j["report"]["conditions"].size() == 6);
}

TEST_CASE("canonical-datum emits a datum and phi") {
  RunResult res = run_cli("--output json canonical-datum " + data("heisenberg_f5.json") + " " +
                          data("subalg_e3.json"));
  CHECK(res.exit_code == 0);
  auto j = parse(res.out);
  CHECK(j["datum"]["vdim"] == 2);
  CHECK(j["check"]["pass"] == true);
}

TEST_CASE("enumerate flag with the naive cross-check") {
  RunResult res = run_cli("--output json enumerate flag --naive-check " + data("abelian1_f5.json"));
  CHECK(res.exit_code == 0);
  auto j = parse(res.out);
  CHECK(j["count"] == 5);
  CHECK(j["naive_check"] == true);
}

TEST_CASE("classify h2 on the heisenberg document") {
  RunResult res = run_cli("--output json classify h2 " + data("heisenberg_f5.json"));
  CHECK(res.exit_code == 0);
  auto j = parse(res.out);
  CHECK(j["data_count"] == 125);
  CHECK(j["orbit_count"] == 3);
  CHECK(j["certificates"]["exhaustive"] == true);
}

TEST_CASE("classify all over F7 carries no caveat, over F5 it does") {
  RunResult res = run_cli("--output json --field F7 classify all --dim 2");
  CHECK(res.exit_code == 0);
  auto j = parse(res.out);
  CHECK(j["complete"] == true);
  CHECK(j["by_dim"][2].size() == 2);

  RunResult res5 = run_cli("--output json --field F5 classify all --dim 1");
  auto j5 = parse(res5.out);
  CHECK(j5["complete"] == false);
  CHECK(j5.contains("caveat"));
}

TEST_CASE("galois group orders") {
  RunResult res = run_cli("--output json galois " + data("pair_trivial_ab2_f5.json"));
  CHECK(res.exit_code == 0);
  CHECK(parse(res.out)["order"] == 100);

  RunResult res20 = run_cli("--output json galois " + data("pair_trivial_h3_f5.json"));
  CHECK(parse(res20.out)["order"] == 20);
}

TEST_CASE("artin reconstruction verdict") {
  RunResult res = run_cli("--output json artin " + data("heisenberg_f5.json") + " " +
                          data("action_signflip_h3_f5.json"));
  CHECK(res.exit_code == 0);
  auto j = parse(res.out);
  CHECK(j["group_order"] == 2);
  CHECK(j["reconstruction"] == "pass");
  CHECK(j["invariant_basis"].size() == 1);
}

TEST_CASE("budget exhaustion uses its own exit code") {
  RunResult res = run_cli("--budget 10 classify h2 " + data("heisenberg_f5.json"));
  CHECK(res.exit_code == 3);
}

TEST_CASE("unchecked load lets bad documents through to the checkers") {
  RunResult res = run_cli("--unchecked verify " + data("not_jacobi.json"));
  CHECK(res.exit_code == 1);
}

TEST_CASE("enumeration over the rationals is an input error") {
  RunResult res = run_cli("enumerate flag " + data("heisenberg.json"));
  CHECK(res.exit_code == 2);
}

TEST_CASE("naive cross-check respects the budget") {
  RunResult res = run_cli("enumerate flag --naive-check " + data("heisenberg_f5.json"));
  CHECK(res.exit_code == 3);  // 5^16 raw quadruples exceed the default cap
}
