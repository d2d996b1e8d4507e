#include "courantx/report.hpp"

namespace courantx {

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["tool"] = "courantctl";

  nlohmann::ordered_json cj;
  cj["chart_dim"] = config.chart_dim;
  cj["courant_k"] = config.courant_k;
  cj["family"] = config.family;
  if (config.twist_potential)
    cj["twist_potential"] = *config.twist_potential;
  else
    cj["twist_potential"] = nullptr;
  if (config.open_twist)
    cj["open_twist"] = *config.open_twist;
  else
    cj["open_twist"] = nullptr;
  cj["seed"] = config.seed;
  cj["samples"] = config.samples;
  cj["max_poly_degree"] = config.max_poly_degree;
  j["config"] = std::move(cj);

  nlohmann::ordered_json suites_json = nlohmann::ordered_json::array();
  for (const auto& s : suites) {
    nlohmann::ordered_json sj;
    sj["suite"] = s.suite;
    sj["pass"] = s.pass();
    nlohmann::ordered_json props = nlohmann::ordered_json::array();
    for (const auto& p : s.properties) {
      nlohmann::ordered_json pj;
      pj["name"] = p.name;
      pj["id"] = p.id;
      pj["samples"] = p.samples;
      pj["failures"] = p.failures;
      pj["pass"] = p.pass();
      if (p.counterexample)
        pj["counterexample"] = *p.counterexample;
      else
        pj["counterexample"] = nullptr;
      props.push_back(std::move(pj));
    }
    sj["properties"] = std::move(props);
    suites_json.push_back(std::move(sj));
  }
  j["suites"] = std::move(suites_json);
  j["pass"] = pass();
  return j;
}

std::string VerificationReport::to_json_text() const {
  return to_json().dump(2) + "\n";
}

}  // namespace courantx
