// End-to-end checks of the command-line binary: exit-code contract,
// worked-example output, determinism of JSON reports, and diagnostics for
// malformed input.

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(ZROOT2_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = std::string("cli_input_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("help exits zero") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("snf --help").exit_code == 0);
}

TEST_CASE("unknown subcommand exits nonzero with a diagnostic") {
  RunResult r = run_cli("frobnicate");
  CHECK(r.exit_code != 0);
  CHECK_FALSE(r.output.empty());
}

TEST_CASE("small finds the worked exponent") {
  RunResult r = run_cli("small --degree 2 --epsilon 1/10 --json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("data").at("k") == 3);
  CHECK(j.at("data").at("element").at("coeffs") == nlohmann::json::array({"-7", "5"}));
}

TEST_CASE("witness-epsilon reproduces the worked example and exits zero") {
  const std::string theta = write_temp(
      "theta.json", R"({"degree": 2, "matrix": [["1","0"],["0","0"]]})");
  RunResult r = run_cli("witness-epsilon --theta " + theta + " --epsilon 1/5 --N 10 --json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("data").at("k") == 4);
  CHECK(j.at("data").at("x").at("coeffs") == nlohmann::json::array({"17", "-12"}));
  CHECK(j.at("status") == "pass");
  std::remove(theta.c_str());
}

TEST_CASE("witness-epsilon refuses a module homomorphism") {
  const std::string theta = write_temp(
      "module.json", R"({"degree": 2, "matrix": [["1","0"],["0","1"]]})");
  RunResult r = run_cli("witness-epsilon --theta " + theta + " --epsilon 1 --N 1");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("module homomorphism") != std::string::npos);
  std::remove(theta.c_str());
}

TEST_CASE("malformed files produce diagnostics naming the field") {
  const std::string bad = write_temp("bad.json", R"({"degree": 2})");
  RunResult r = run_cli("module-check --theta " + bad);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("matrix") != std::string::npos);
  std::remove(bad.c_str());

  const std::string notjson = write_temp("notjson.json", "{{{");
  RunResult r2 = run_cli("snf " + notjson);
  CHECK(r2.exit_code == 2);
  CHECK(r2.output.find("not valid JSON") != std::string::npos);
  std::remove(notjson.c_str());
}

TEST_CASE("snf and coker handle the worked matrix") {
  const std::string m = write_temp("m.json", R"({"matrix": [["0","2"],["1","0"]]})");
  RunResult r = run_cli("snf " + m + " --json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("data").at("d") ==
        nlohmann::json::array({nlohmann::json::array({"1", "0"}), nlohmann::json::array({"0", "2"})}));

  RunResult rc = run_cli("coker " + m + " --json");
  REQUIRE(rc.exit_code == 0);
  auto jc = nlohmann::json::parse(rc.output);
  CHECK(jc.at("data").at("torsion") == nlohmann::json::array({"2"}));
  CHECK(jc.at("data").at("free_rank") == 0);
  std::remove(m.c_str());
}

TEST_CASE("obstruction reports parity for a module matrix") {
  const std::string m = write_temp(
      "mod.json",
      R"({"degree": 2, "entries": [[["0","0"]],[["1","0"]]]})");  // shift truncation, k = 1
  RunResult r = run_cli("obstruction " + m + " --json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("data").at("cokernel").at("free_rank") == 2);
  CHECK(j.at("status") == "pass");
  std::remove(m.c_str());
}

TEST_CASE("theorem-demo prints the required rank and the caveat") {
  RunResult r = run_cli("theorem-demo --degree 2 --trunc 3 --trials 5");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("7") != std::string::npos);
  CHECK(r.output.find("NOT machine-verified") != std::string::npos);
}

TEST_CASE("reports are byte-identical across identical invocations") {
  const std::string args = "theorem-demo --degree 2 --trunc 2 --trials 5 --seed 9 --json";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);

  RunResult c = run_cli("iso-roundtrip --witness corner --n 2 --trials 10 --seed 1 --json");
  RunResult d = run_cli("iso-roundtrip --witness corner --n 2 --trials 10 --seed 1 --json");
  REQUIRE(c.exit_code == 0);
  CHECK(c.output == d.output);

  RunResult e = run_cli("selftest --json");
  RunResult f = run_cli("selftest --json");
  REQUIRE(e.exit_code == 0);
  CHECK(e.output == f.output);
  CHECK(nlohmann::json::parse(e.output).at("status") == "pass");
}

TEST_CASE("iso-roundtrip and corner-demo pass on the named witnesses") {
  for (const std::string name : {"shift", "interleave", "split", "absorb"}) {
    RunResult r = run_cli("iso-roundtrip --witness " + name + " --trials 20 --json");
    REQUIRE(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.output).at("status") == "pass");
  }
  RunResult corner = run_cli("corner-demo --n 2 --trials 20 --json");
  REQUIRE(corner.exit_code == 0);
  auto j = nlohmann::json::parse(corner.output);
  CHECK(j.at("data").at("source") == "((A + Z) + ((A + Z) + (A + Z)))");
  CHECK(j.at("data").at("target") == "(A + Z)");
}

TEST_CASE("witness-unbounded demo instance clears its targets") {
  RunResult r = run_cli("witness-unbounded --stages 4 --json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("status") == "pass");
  CHECK(j.at("data").at("x").size() == 4);
}

TEST_CASE("witness-unbounded accepts an instance file") {
  const std::string inst = write_temp("inst.json", R"({
    "degree": 2,
    "stages": [
      {"row": 0, "col": 0, "diagonal": [["1","0"],["0","0"]], "priors": []},
      {"row": 1, "col": 1, "diagonal": [["1","0"],["0","0"]], "priors": [[["1","0"],["0","1"]]]}
    ],
    "targets": ["1", "3"]
  })");
  RunResult r = run_cli("witness-unbounded --instance " + inst + " --json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("status") == "pass");
  CHECK(j.at("data").at("x") ==
        nlohmann::json::array({nlohmann::json::array({"3", "-2"}), nlohmann::json::array({"-7", "5"})}));
  std::remove(inst.c_str());
}

TEST_CASE("module-check recognizes a multiplication map") {
  const std::string rep = write_temp("rep.json", R"({"degree": 2, "matrix": [["0","2"],["1","0"]]})");
  RunResult r = run_cli("module-check --theta " + rep + " --json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("data").at("is_module_hom") == true);
  CHECK(j.at("data").at("multiplies_by") == nlohmann::json::array({"0", "1"}));
  std::remove(rep.c_str());
}

TEST_CASE("theta command evaluates the partial-sum scaling") {
  const std::string a = write_temp("a.json", R"({"degree":2,"terms":[["5","0"],["7","0"],["11","0"]]})");
  const std::string b = write_temp("b.json", R"({"degree":2,"terms":[["0","0"],["0","0"],["1","0"]]})");
  RunResult r = run_cli("theta --a " + a + " --b " + b + " --json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("data").at("theta_b_of_a").at("terms") ==
        nlohmann::json::array({nlohmann::json::array({"0", "0"}), nlohmann::json::array({"0", "0"}),
                               nlohmann::json::array({"11", "0"})}));
  std::remove(a.c_str());
  std::remove(b.c_str());
}
