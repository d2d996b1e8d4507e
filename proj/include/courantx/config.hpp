#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "courantx/courant.hpp"

namespace courantx {

// Raised on malformed configuration or form literals; carries a position.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses a form literal over the named chart coordinates, e.g.
//   x^2*y dx^dy + 1/2 dz - 3
// Coordinates are x, y, z, w (charts up to dimension 4) or x1, x2, ...;
// basis factors are the matching dx tokens chained with '^'.
Form parse_form(const std::string& text, int chart_dim);

struct SuiteConfig {
  int chart_dim = 3;
  int courant_k = 1;
  std::string family = "standard";
  std::optional<std::string> twist_potential;  // literal for the potential B
  std::optional<std::string> open_twist;       // literal for a raw twist H
  std::uint64_t seed = 1;
  int samples = 25;
  int max_poly_degree = 2;
  std::vector<std::string> suites;  // empty means every registered suite
  // Quadratic family data (defaults to the rotation algebra when absent):
  // entries i j m -> coefficient of frame m in [e_i, e_j], 1-based,
  // antisymmetrized automatically.
  std::vector<std::vector<std::vector<Rational>>> lie_c;
  std::vector<std::vector<Rational>> gram;

  void validate() const;  // throws ConfigError
};

SuiteConfig parse_config_file(const std::string& path);
SuiteConfig parse_config_text(const std::string& text);

// Builds the configured structure; twist potentials are differentiated here.
CourantStructure structure_from_config(const SuiteConfig& cfg);

}  // namespace courantx
