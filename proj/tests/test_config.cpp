#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "lcsoc/config.hpp"
#include "lcsoc/error.hpp"
#include "lcsoc/socle.hpp"

using namespace lcsoc;

namespace {

bool has(const std::string& s, const std::string& sub) {
  return s.find(sub) != std::string::npos;
}

std::string error_text(const std::string& cfg) {
  try {
    spec_from_config_text(cfg, "cfg");
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("presets are embedded") {
  const auto& presets = preset_texts();
  CHECK(presets.count("hartshorne") == 1);
  CHECK(presets.count("example12") == 1);
}

TEST_CASE("hartshorne preset parses and builds") {
  ScenarioSpec spec = spec_from_preset("hartshorne");
  CHECK(spec.characteristic == 32003);
  CHECK(spec.backend == "poly");
  CHECK(spec.uvars == std::vector<std::string>{"u", "v"});
  CHECK(spec.xvars == std::vector<std::string>{"x", "y"});
  CHECK(spec.xweights.empty());
  CHECK(spec.f == "u*x + v*y");
  CHECK(spec.lmin == 2);
  CHECK(spec.lmax == 30);
  CHECK(spec.lstep == 1);

  BuiltScenario built = build_scenario(spec);
  REQUIRE(built.ring != nullptr);
  CHECK(built.ring->backend() == RingBackend::Poly);
  CHECK(built.ring->num_uvars() == 2);
  CHECK(built.ring->num_xvars() == 2);
  REQUIRE(built.f.has_value());
  CHECK(built.f->terms().size() == 2);
  CHECK(built.f->p() == 1);
  CHECK(built.f->weights() == std::vector<std::int32_t>{1, 1});

  SocleReport rep = socle_report(*built.f, 2);
  CHECK(rep.star_socle_total() == 1);
}

TEST_CASE("example12 preset builds the semigroup ring") {
  ScenarioSpec spec = spec_from_preset("example12");
  CHECK(spec.backend == "semigroup");
  CHECK(spec.generators.size() == 4);
  CHECK(spec.xweights == std::vector<int>{4, 2, 2});
  CHECK(spec.lmin == 3);
  CHECK(spec.lmax == 19);
  CHECK(spec.lstep == 2);

  BuiltScenario built = build_scenario(spec);
  CHECK(built.ring->backend() == RingBackend::Semigroup);
  CHECK(built.ring->num_xvars() == 3);
  CHECK(built.ring->dim_T() == 2);
  REQUIRE(built.f.has_value());
  CHECK(built.f->p() == 2);
  CHECK(built.f->weights() == std::vector<std::int32_t>{4, 2, 2});
}

TEST_CASE("unknown preset lists the available ones") {
  CHECK_THROWS_WITH_AS(spec_from_preset("nope"),
                       doctest::Contains("example12, hartshorne"), ConfigError);
}

TEST_CASE("config text: value forms and comments") {
  std::string cfg =
      "# leading comment\n"
      "characteristic = 0   # rationals\n"
      "backend = \"poly\"\n"
      "uvars = [\"a\", \"b\"]\n"
      "xvars = [\"x\"]\n"
      "xweights = []\n"
      "f = \"a*x # not a comment\"\n"
      "\n"
      "lmin = 1\n"
      "lmax = 4\n"
      "degcap = 9\n"
      "windowcap = 77\n";
  ScenarioSpec spec = spec_from_config_text(cfg, "cfg");
  CHECK(spec.characteristic == 0);
  CHECK(spec.uvars == std::vector<std::string>{"a", "b"});
  CHECK(spec.xvars == std::vector<std::string>{"x"});
  CHECK(spec.xweights.empty());
  CHECK(spec.f == "a*x # not a comment");
  CHECK(spec.lmin == 1);
  CHECK(spec.lmax == 4);
  CHECK(spec.degcap == 9);
  CHECK(spec.windowcap == 77);
}

TEST_CASE("config text: diagnostics carry line numbers") {
  CHECK(has(error_text("characteristic = 7\nwat = 1\n"), "cfg:2: unknown key 'wat'"));
  CHECK(has(error_text("lmin = 2\nlmin = 3\n"), "cfg:2: duplicate key 'lmin'"));
  CHECK(has(error_text("just words\n"), "cfg:1: expected 'key = value'"));
  CHECK(has(error_text("lmin = \"two\"\n"), "expects an integer"));
  CHECK(has(error_text("backend = 3\n"), "expects a \"string\""));
  CHECK(has(error_text("uvars = [1, 2]\n"), "list of strings"));
  CHECK(has(error_text("xweights = [\"a\"]\n"), "list of integers"));
  CHECK(has(error_text("uvars = [\"a\", 2]\n"), "mixes"));
  CHECK(has(error_text("uvars = [\"a\"\n"), "unterminated list"));
  CHECK(has(error_text("lmin =\n"), "missing value"));
  CHECK(has(error_text("= 3\n"), "missing key"));
  CHECK(has(error_text("backend = \"neither\"\n"), "poly"));
  CHECK(has(error_text("f = oops\n"), "not an integer"));
}

TEST_CASE("build_scenario inconsistencies") {
  ScenarioSpec spec = spec_from_preset("hartshorne");
  spec.generators = {"u^2"};
  CHECK_THROWS_AS(build_scenario(spec), ConfigError);

  ScenarioSpec sg = spec_from_preset("example12");
  sg.generators.clear();
  CHECK_THROWS_AS(build_scenario(sg), ConfigError);

  ScenarioSpec no_u = spec_from_preset("hartshorne");
  no_u.uvars.clear();
  CHECK_THROWS_AS(build_scenario(no_u), ConfigError);

  ScenarioSpec no_x = spec_from_preset("hartshorne");
  no_x.xvars.clear();
  CHECK_THROWS_AS(build_scenario(no_x), ConfigError);

  ScenarioSpec composite = spec_from_preset("hartshorne");
  composite.characteristic = 4;
  CHECK_THROWS_AS(build_scenario(composite), ConfigError);

  // a spec without f builds a bare ring
  ScenarioSpec bare = spec_from_preset("hartshorne");
  bare.f.clear();
  BuiltScenario built = build_scenario(bare);
  CHECK(built.ring != nullptr);
  CHECK_FALSE(built.f.has_value());
}

TEST_CASE("config files round-trip through the parser") {
  std::string path = "test_config_roundtrip.cfg";
  {
    std::ofstream out(path);
    out << "characteristic = 13\nbackend = \"poly\"\nuvars = [\"u\", \"v\"]\n"
        << "xvars = [\"x\", \"y\"]\nf = \"u*x + v*y\"\nlmin = 2\nlmax = 5\n";
  }
  ScenarioSpec spec = spec_from_config_file(path);
  CHECK(spec.characteristic == 13);
  BuiltScenario built = build_scenario(spec);
  CHECK(built.ring->characteristic() == 13);
  std::remove(path.c_str());

  CHECK_THROWS_WITH_AS(spec_from_config_file("no_such_file.cfg"),
                       doctest::Contains("cannot open"), ConfigError);
}
