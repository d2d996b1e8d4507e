// Batch driver: runs verification suites over a configured structure and
// reports per-property outcomes, optionally as a machine-readable file.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "courantx/config.hpp"
#include "courantx/report.hpp"
#include "courantx/suites.hpp"

namespace {

int fail_usage(const std::string& msg) {
  std::cerr << "courantctl: error: " << msg << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"property verification for transgressed Courant structures"};

  std::string config_path;
  std::vector<std::string> suites;
  std::string json_path;
  bool list_suites = false;
  std::uint64_t seed = 0;
  int samples = 0;
  bool seed_set = false, samples_set = false;

  app.add_option("-c,--config", config_path, "configuration file (key = value lines)");
  app.add_option("-s,--suite", suites,
                 "suite to run (repeatable; overrides the config selection)");
  app.add_option("--seed", seed, "override the sampling seed")
      ->each([&](const std::string&) { seed_set = true; });
  app.add_option("--samples", samples, "override the per-property sample count")
      ->each([&](const std::string&) { samples_set = true; });
  app.add_option("-j,--json", json_path, "write the full report to this file");
  app.add_flag("--list-suites", list_suites, "print the known suite names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (list_suites) {
    for (const std::string& name : courantx::suite_names())
      std::cout << name << "\n";
    return 0;
  }

  courantx::SuiteConfig cfg;
  if (!config_path.empty()) {
    try {
      cfg = courantx::parse_config_file(config_path);
    } catch (const std::exception& e) {
      return fail_usage(e.what());
    }
  }
  if (!suites.empty()) cfg.suites = suites;
  if (seed_set) cfg.seed = seed;
  if (samples_set) cfg.samples = samples;

  for (const std::string& name : cfg.suites)
    if (!courantx::is_suite_name(name))
      return fail_usage("unknown suite '" + name + "' (see --list-suites)");

  courantx::VerificationReport rep;
  try {
    cfg.validate();
    rep = courantx::run_suites(cfg);
  } catch (const std::exception& e) {
    return fail_usage(e.what());
  }

  int total = 0, failed = 0;
  for (const auto& suite : rep.suites) {
    for (const auto& pr : suite.properties) {
      ++total;
      const bool ok = pr.pass();
      if (!ok) ++failed;
      std::cout << (ok ? "PASS" : "FAIL") << "  " << suite.suite << ": "
                << pr.name << "  [" << pr.id << ", " << pr.samples
                << (pr.samples == 1 ? " sample]" : " samples]") << "\n";
      if (!ok && pr.counterexample)
        std::cout << "      " << *pr.counterexample << "\n";
    }
  }
  std::cout << (failed == 0 ? "OK" : "FAILED") << ": " << (total - failed)
            << "/" << total << " properties passed across " << rep.suites.size()
            << (rep.suites.size() == 1 ? " suite" : " suites") << " (seed "
            << cfg.seed << ", " << cfg.samples << " samples)\n";

  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) return fail_usage("cannot open '" + json_path + "' for writing");
    out << rep.to_json_text();
    if (!out) return fail_usage("failed writing '" + json_path + "'");
  }

  return failed == 0 ? 0 : 1;
}
