#include "doctest.h"

#include "courantx/config.hpp"

using namespace courantx;

TEST_CASE("form literals parse with products, powers and fractions") {
  Poly x = Poly::variable(3, 0), y = Poly::variable(3, 1);
  Form dx = Form::basis(3, {0}), dz = Form::basis(3, {2});

  CHECK(parse_form("x*dx^dy + 1/2 dz", 3) ==
        x * Form::basis(3, {0, 1}) + Rational(1, 2) * dz);
  CHECK(parse_form("-y dx", 3) == Rational(-1) * (y * dx));
  CHECK(parse_form("x^2 y dz", 3) == (x * x * y) * dz);
  CHECK(parse_form("3", 3) == Form::constant(3, 3));
  CHECK(parse_form("", 3).is_zero());
  CHECK(parse_form("0", 3).is_zero());
  CHECK(parse_form("dx^dx", 3).is_zero());
  // numbered coordinates alias the lettered ones on small charts
  CHECK(parse_form("x2 dx1", 3) == y * dx);
  // shuffle sign on out-of-order generators
  CHECK(parse_form("dy^dx", 3) == Rational(-1) * Form::basis(3, {0, 1}));
}

TEST_CASE("form literal errors carry positions") {
  CHECK_THROWS_AS(parse_form("x +", 3), ConfigError);
  CHECK_THROWS_AS(parse_form("dw", 3), ConfigError);
  CHECK_THROWS_AS(parse_form("x4", 3), ConfigError);
  CHECK_THROWS_AS(parse_form("x ** dx", 3), ConfigError);
  CHECK_THROWS_AS(parse_form("(x dx", 3), ConfigError);
  try {
    parse_form("x + @", 3);
    FAIL("expected a parse error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
}

TEST_CASE("config text parses keys, lists and comments") {
  const std::string text =
      "# structure under test\n"
      "chart_dim = 3\n"
      "courant_k = 2\n"
      "family = standard\n"
      "\n"
      "seed = 99\n"
      "samples = 7\n"
      "max_poly_degree = 1\n"
      "suites = cartan, tau-core\n";
  SuiteConfig cfg = parse_config_text(text);
  CHECK(cfg.chart_dim == 3);
  CHECK(cfg.courant_k == 2);
  CHECK(cfg.family == "standard");
  CHECK(cfg.seed == 99);
  CHECK(cfg.samples == 7);
  CHECK(cfg.max_poly_degree == 1);
  REQUIRE(cfg.suites.size() == 2);
  CHECK(cfg.suites[0] == "cartan");
  CHECK(cfg.suites[1] == "tau-core");
  cfg.validate();
}

TEST_CASE("config rejects malformed input") {
  CHECK_THROWS_AS(parse_config_text("chart_dim = frog\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("no_such_key = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("chart_dim\n"), ConfigError);

  SuiteConfig cfg;
  cfg.samples = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = SuiteConfig{};
  cfg.family = "nonsense";
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = SuiteConfig{};
  cfg.twist_potential = "dx^dy";  // twist data outside the twisted family
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = SuiteConfig{};
  cfg.courant_k = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("twisted structures are built from a potential or a literal twist") {
  SuiteConfig cfg;
  cfg.chart_dim = 3;
  cfg.courant_k = 1;
  cfg.family = "twisted";
  cfg.twist_potential = "z dx^dy";
  cfg.validate();
  CourantStructure Q = structure_from_config(cfg);
  CHECK(Q.twist == Form::basis(3, {0, 1, 2}));
  CHECK(Q.twist_is_closed());

  SuiteConfig open_cfg;
  open_cfg.chart_dim = 4;
  open_cfg.courant_k = 1;
  open_cfg.family = "twisted";
  open_cfg.open_twist = "x4 dx1^dx2^dx3";
  open_cfg.validate();
  CourantStructure Qo = structure_from_config(open_cfg);
  CHECK_FALSE(Qo.twist_is_closed());

  SuiteConfig bad;
  bad.chart_dim = 3;
  bad.courant_k = 1;
  bad.family = "twisted";
  bad.twist_potential = "dx";  // degree k+1 = 2 required
  bad.validate();
  CHECK_THROWS_AS(structure_from_config(bad), ConfigError);
}

TEST_CASE("quadratic structure tables parse from the config syntax") {
  const std::string text =
      "chart_dim = 0\n"
      "family = quadratic\n"
      "lie_rank = 3\n"
      "lie_structure = 1 2 3 -> 1; 2 3 1 -> 1; 3 1 2 -> 1\n"
      "gram = -2 0 0; 0 -2 0; 0 0 -2\n";
  SuiteConfig cfg = parse_config_text(text);
  cfg.validate();
  CourantStructure Q = structure_from_config(cfg);
  CHECK(Q.rank() == 3);
  CHECK(Q.lie_c[0][1][2] == Rational(1));
  CHECK(Q.lie_c[1][0][2] == Rational(-1));  // antisymmetrized automatically
  CHECK(Q.lie_c[1][2][0] == Rational(1));
  CHECK(Q.gram[0][0] == Rational(-2));
  CHECK(Q.gram[0][1] == Rational(0));
  Q.validate();
}
