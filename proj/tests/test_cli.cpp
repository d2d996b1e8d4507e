// Drives the courantctl binary end to end. The path to the binary arrives as
// the single positional argument (wired up in CMakeLists).
#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "courantx/suites.hpp"
#include "json.hpp"

namespace {

std::string g_ctl;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_ctl(const std::string& args, const std::string& tag) {
  const std::string out_path = "cli_" + tag + ".out";
  const std::string err_path = "cli_" + tag + ".err";
  const std::string cmd =
      "'" + g_ctl + "' " + args + " > " + out_path + " 2> " + err_path;
  int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

}  // namespace

TEST_CASE("listing the suites matches the registry") {
  RunResult r = run_ctl("--list-suites", "list");
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::vector<std::string> got;
  for (std::string line; std::getline(lines, line);)
    if (!line.empty()) got.push_back(line);
  CHECK(got == courantx::suite_names());
}

TEST_CASE("a small passing run exits cleanly") {
  RunResult r = run_ctl("--suite cartan --samples 2 --seed 7", "small");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("OK") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("unknown suites are a usage error") {
  RunResult r = run_ctl("--suite no-such-suite", "unknown");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("no-such-suite") != std::string::npos);
}

TEST_CASE("a malformed config file is a usage error") {
  {
    std::ofstream cfg("cli_bad.cfg", std::ios::binary);
    cfg << "chart_dim = banana\n";
  }
  RunResult r = run_ctl("--config cli_bad.cfg --suite cartan", "badcfg");
  CHECK(r.exit_code == 2);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("a config file selects the run and the report reflects it") {
  {
    std::ofstream cfg("cli_run.cfg", std::ios::binary);
    cfg << "chart_dim = 2\n"
           "courant_k = 1\n"
           "family = standard\n"
           "seed = 11\n"
           "samples = 2\n"
           "suites = cartan, oddpath\n";
  }
  RunResult r = run_ctl("--config cli_run.cfg --json cli_report.json", "cfgrun");
  REQUIRE(r.exit_code == 0);

  nlohmann::json rep = nlohmann::json::parse(slurp("cli_report.json"));
  CHECK(rep.at("schema_version") == 1);
  CHECK(rep.at("tool") == "courantctl");
  CHECK(rep.at("config").at("chart_dim") == 2);
  CHECK(rep.at("config").at("seed") == 11);
  CHECK(rep.at("pass") == true);
  REQUIRE(rep.at("suites").size() == 2);
  CHECK(rep.at("suites")[0].at("suite") == "cartan");
  CHECK(rep.at("suites")[1].at("suite") == "oddpath");
  for (const auto& suite : rep.at("suites"))
    for (const auto& prop : suite.at("properties")) {
      CHECK(prop.at("pass") == true);
      CHECK(prop.at("failures") == 0);
    }
}

TEST_CASE("identical configurations produce byte-identical reports") {
  const std::string args =
      "--suite tau-core --suite ctl --samples 3 --seed 123";
  RunResult r1 = run_ctl(args + " --json cli_det1.json", "det1");
  RunResult r2 = run_ctl(args + " --json cli_det2.json", "det2");
  REQUIRE(r1.exit_code == 0);
  REQUIRE(r2.exit_code == 0);
  const std::string a = slurp("cli_det1.json"), b = slurp("cli_det2.json");
  REQUIRE_FALSE(a.empty());
  CHECK(a == b);
  CHECK(r1.out == r2.out);
}

TEST_CASE("sample and seed overrides reach the report") {
  RunResult r = run_ctl("--suite cartan --samples 4 --seed 9 --json cli_ovr.json",
                        "ovr");
  REQUIRE(r.exit_code == 0);
  nlohmann::json rep = nlohmann::json::parse(slurp("cli_ovr.json"));
  CHECK(rep.at("config").at("seed") == 9);
  CHECK(rep.at("config").at("samples") == 4);
  for (const auto& prop : rep.at("suites")[0].at("properties"))
    CHECK(prop.at("samples") >= 1);
}

int main(int argc, char** argv) {
  doctest::Context ctx;
  std::vector<char*> pass;
  for (int i = 0; i < argc; ++i) {
    if (i > 0 && argv[i][0] != '-') {
      g_ctl = argv[i];
      continue;
    }
    pass.push_back(argv[i]);
  }
  ctx.applyCommandLine(static_cast<int>(pass.size()), pass.data());
  if (g_ctl.empty()) {
    std::fprintf(stderr, "usage: test_cli <path-to-courantctl>\n");
    return 1;
  }
  return ctx.run();
}
