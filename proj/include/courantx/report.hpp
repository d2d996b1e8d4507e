#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "courantx/config.hpp"

namespace courantx {

struct PropertyResult {
  std::string name;  // human-readable property name
  std::string id;    // stable machine id, e.g. "cartan.d_squared"
  int samples = 0;
  int failures = 0;
  std::optional<std::string> counterexample;

  bool pass() const { return failures == 0; }
};

struct SuiteResult {
  std::string suite;
  std::vector<PropertyResult> properties;

  bool pass() const {
    for (const auto& p : properties)
      if (!p.pass()) return false;
    return true;
  }
};

struct VerificationReport {
  SuiteConfig config;
  std::vector<SuiteResult> suites;

  bool pass() const {
    for (const auto& s : suites)
      if (!s.pass()) return false;
    return true;
  }

  nlohmann::ordered_json to_json() const;
  std::string to_json_text() const;  // stable, pretty-printed, trailing newline
};

}  // namespace courantx
