#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

std::string cli_path() {
  const char* path = std::getenv("RADONUM_CLI");
  REQUIRE_MESSAGE(path != nullptr, "RADONUM_CLI must point at the built binary");
  return path;
}

RunResult run_cli(const std::string& args) {
  std::string command = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer;
  while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe))
    result.stdout_text.append(buffer.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

json run_json(const std::string& args) {
  RunResult r = run_cli(args + " --format json");
  REQUIRE(r.exit_code == 0);
  return json::parse(r.stdout_text);
}

}  // namespace

TEST_CASE("parse subcommand") {
  json j = run_json("parse --eq y=2*x+1");
  CHECK(j["equation"] == "y=2*x+1");
  CHECK(j["kind"] == "binary-function");
  CHECK(j["poly"] == json::array({1, 2}));
  CHECK(j["domain_floor"] == 1);

  j = run_json("parse --eq \"y = 2*x1 + x2 + 3\"");
  CHECK(j["kind"] == "general-linear");
  CHECK(j["coeffs"] == json::array({2, 1}));
  CHECK(j["constant"] == 3);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("parse --eq y=x-1").exit_code == 2);
  CHECK(run_cli("parse --eq y=x").exit_code == 2);  // fixed point domain
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("rb --eq y=2*x+1").exit_code == 2);  // missing --n
}

TEST_CASE("classes dump, one line per class") {
  RunResult r = run_cli("classes --eq y=2*x+1 --n 7");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text == "1,3,7\n2,5\n4\n6\n");
}

TEST_CASE("rb with closed form and verification") {
  json j = run_json("rb --eq y=2*x+1 --n 7");
  CHECK(j["rb"] == 5);
  CHECK(j["mu"] == 3);
  CHECK(j["route"] == "closed-form-linear");

  j = run_json("rb --eq y=x^2+1 --n 10 --verify");
  CHECK(j["rb"] == 8);
  CHECK(j["route"] == "mu-scan");
  CHECK(j["oracle"] == 8);
  CHECK(j["agree"] == true);
}

TEST_CASE("mu with trace") {
  json j = run_json("mu --eq y=x^2 --n 16 --trace");
  CHECK(j["mu"] == 3);
  CHECK(j["rb"] == 14);
  REQUIRE(j.contains("trace"));
  CHECK(j["trace"][0]["t"] == 4);
}

TEST_CASE("gr closed forms with verification") {
  json j = run_json("gr --k 2 --rainbow y=x+2 --mono y=x1+x2 --verify");
  CHECK(j["kind"] == "value");
  CHECK(j["N"] == 6);
  CHECK(j["route"] == "lambda-min");
  CHECK(j["verified"] == true);
  CHECK(j["mode"] == "distinct");

  // y=x^2+1 has the power shape with a, b odd, so the trichotomy answers.
  j = run_json("gr --k 2 --rainbow y=x+2 --mono y=x^2+1 --verify");
  CHECK(j["kind"] == "notexist");
  CHECK(j["reason"] == "parity-obstruction");
  CHECK(j["route"] == "parity-trichotomy");
  CHECK(j["verified"] == true);

  // Not a pure power, but f(x)-x = 2x^3+1 is always odd.
  j = run_json("gr --k 2 --rainbow y=x+2 --mono y=2*x^3+x+1 --verify");
  CHECK(j["kind"] == "notexist");
  CHECK(j["reason"] == "no-x-min");
  CHECK(j["route"] == "x-min");
  CHECK(j["verified"] == true);

  j = run_json("gr --k 2 --rainbow y=x+2 --mono y=2*x^2+2 --verify");
  CHECK(j["N"] == 10);
  CHECK(j["route"] == "parity-trichotomy");

  j = run_json("gr --k 5 --rainbow y=x+3 --mono y=x1+x2");
  CHECK(j["N"] == 5);
  CHECK(j["route"] == "rainbow-forcing");

  j = run_json("gr --k 2 --rainbow y=x --mono y=x1+x2 --mode repeats --nmax 10");
  CHECK(j["N"] == 5);  // Schur via the identity route

  j = run_json("gr --k 2 --rainbow y=x+4 --mono y=x^2 --nmax 12");
  CHECK(j["kind"] == "unknown");
  CHECK(j["route"] == "oracle-search");
}

TEST_CASE("oracle subcommands") {
  json j = run_json("oracle-rb --eq y=2*x+1 --n 7");
  CHECK(j["rb"] == 5);

  j = run_json("oracle-rado --k 2 --eq y=x1+x2 --mode repeats --nmax 10");
  CHECK(j["kind"] == "value");
  CHECK(j["N"] == 5);
  CHECK(j["mode"] == "repeats");

  j = run_json("oracle-rado --k 2 --eq y=2*x+1");
  CHECK(j["kind"] == "notexist");
  CHECK(j["reason"] == "block-coloring");

  j = run_json("oracle-gr --k 2 --rainbow y=x+2 --mono y=x1+x2 --nmax 10");
  CHECK(j["candidate"] == 6);
  CHECK(j["monotone"] == true);

  j = run_json("rado-nonexist --a 2 --b 1 --nmax 1000");
  CHECK(j["verified"] == true);
}

TEST_CASE("budget exhaustion exits with 3") {
  RunResult r = run_cli("oracle-rado --k 3 --eq y=x1+x2 --mode repeats --nmax 14 --budget 100");
  CHECK(r.exit_code == 3);
}

TEST_CASE("json output is schema-stable") {
  RunResult first = run_cli("gr --k 3 --rainbow y=x+3 --mono y=x^2+1 --format json");
  RunResult second = run_cli("gr --k 3 --rainbow y=x+3 --mono y=x^2+1 --format json");
  CHECK(first.exit_code == 0);
  CHECK(first.stdout_text == second.stdout_text);
  json j = json::parse(first.stdout_text);
  // Golden shape: these keys are the contract.
  for (const char* key : {"kind", "N", "witness", "mode", "k", "rainbow", "mono", "route"})
    CHECK_MESSAGE(j.contains(key), key);
  CHECK(j["witness"].contains("colors"));
}

TEST_CASE("witness files land in --out") {
  std::string path = "/tmp/radonum_cli_test_out.json";
  std::remove(path.c_str());
  RunResult r = run_cli("oracle-rado --k 2 --eq y=x1+x2 --mode repeats --nmax 10 --out " + path);
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  json j = json::parse(in);
  CHECK(j["N"] == 5);
  // The attached avoider is the coloring of [4] with classes {1,4},{2,3}.
  CHECK(j["witness"]["n"] == 4);
  CHECK(j["witness"]["k"] == 2);
  CHECK(j["witness"]["colors"] == json::array({1, 2, 2, 1}));
  std::remove(path.c_str());
}

TEST_CASE("table and csv formats") {
  RunResult r = run_cli("rb --eq y=2*x+1 --n 7");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("rb: 5") != std::string::npos);

  r = run_cli("rb --eq y=2*x+1 --n 7 --format csv");
  CHECK(r.stdout_text.find("rb") != std::string::npos);
  CHECK(r.stdout_text.find("5") != std::string::npos);
}

TEST_CASE("config file merges under flags") {
  std::string path = "/tmp/radonum_cli_test_config.ini";
  {
    std::ofstream out(path);
    out << "format=json\n";
  }
  RunResult r = run_cli("rb --eq y=2*x+1 --n 7 --config " + path);
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.stdout_text)["rb"] == 5);
  // An explicit flag wins over the file.
  r = run_cli("rb --eq y=2*x+1 --n 7 --config " + path + " --format table");
  CHECK(r.stdout_text.find("rb: 5") != std::string::npos);
  std::remove(path.c_str());
}
