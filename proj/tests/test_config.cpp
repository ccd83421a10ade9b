#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frlab/config.hpp"

using namespace frlab;

TEST_CASE("empty text yields the documented defaults") {
  const RunConfig c = parse_config_text("");
  CHECK(c.grid.dims == 1);
  CHECK(c.grid.n == 1024);
  CHECK(c.grid.x_min == -4.0);
  CHECK(c.grid.x_max == 4.0);
  CHECK(c.grid.stencil_order == 4);
  CHECK(c.kappa == 0.1);
  CHECK(c.data.family == DataSpec::Family::vacuum);
  CHECK(c.evolve.cfl == 0.25);
  CHECK(c.evolve.T == 1.0);
  CHECK(c.evolve.sample_stride == 8);
  CHECK(c.evolve.norm_d == 1);
  CHECK(c.evolve.couplings.kappa_terms);
  CHECK(c.out_dir == "out");
}

TEST_CASE("sections, comments and values parse") {
  const RunConfig c = parse_config_text(
      "# comment\n"
      "[grid]\n"
      "n = 256        # inline comment\n"
      "x_min = -8\n"
      "x_max = 8\n"
      "[model]\n"
      "kappa = 0.01\n"
      "kappa_list = 0.1, 0.01, 0.001\n"
      "[data]\n"
      "family = scalar_bump\n"
      "amplitude = 1e-3\n"
      "width = 2\n"
      "[evolve]\n"
      "T = 0.5\n"
      "einstein = true\n"
      "norm_d = 2\n"
      "[output]\n"
      "dir = runs/a\n"
      "snapshots = false\n"
      "[debug]\n"
      "ablate_kappa_terms = true\n");
  CHECK(c.grid.n == 256);
  CHECK(c.grid.x_min == -8.0);
  CHECK(c.kappa == 0.01);
  REQUIRE(c.kappa_list.size() == 3);
  CHECK(c.kappa_list[1] == 0.01);
  CHECK(c.data.family == DataSpec::Family::scalar_bump);
  CHECK(c.data.width == 2.0);
  CHECK(c.evolve.T == 0.5);
  CHECK(c.evolve.einstein);
  CHECK(c.evolve.norm_d == 2);
  CHECK(c.out_dir == "runs/a");
  CHECK(!c.write_snapshots);
  CHECK(!c.evolve.couplings.kappa_terms);
}

TEST_CASE("unknown keys and sections are rejected") {
  CHECK_THROWS_AS(parse_config_text("typo_key = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[grid]\nnn = 64\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[nope]\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[grid]\nn 64\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[model]\nkappa = abc\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[evolve]\neinstein = maybe\n"), ConfigError);
}

TEST_CASE("semantic validation") {
  CHECK_THROWS_AS(parse_config_text("[model]\nkappa = -0.1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[model]\nkappa = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[evolve]\nT = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[data]\namplitude = -1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[grid]\nn = 4\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[grid]\ndims = 2\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[grid]\nstencil_order = 3\n"), ConfigError);
  // norm depth capped at 4 in 1d and 2 in 3d
  CHECK_NOTHROW(parse_config_text("[evolve]\nnorm_d = 4\n"));
  CHECK_THROWS_AS(parse_config_text("[evolve]\nnorm_d = 5\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[grid]\ndims = 3\nn = 16\n[evolve]\nnorm_d = 3\n"),
                  ConfigError);
}

TEST_CASE("fingerprint tracks the physically relevant settings") {
  const RunConfig a = parse_config_text("");
  const RunConfig b = parse_config_text("[model]\nkappa = 0.2\n");
  CHECK(config_fingerprint(a) == config_fingerprint(parse_config_text("")));
  CHECK(config_fingerprint(a) != config_fingerprint(b));
}
