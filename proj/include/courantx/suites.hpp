#pragma once

#include <string>
#include <vector>

#include "courantx/report.hpp"

namespace courantx {

// Names of all verification suites, in execution order.
std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);

// Runs one suite against the configuration (seed, sample count, structure
// parameters). Throws std::invalid_argument on an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);

// Runs cfg.suites (all suites when empty) and assembles the report.
VerificationReport run_suites(const SuiteConfig& cfg);

}  // namespace courantx
