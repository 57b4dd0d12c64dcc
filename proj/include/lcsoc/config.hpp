#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lcsoc/toplc.hpp"

namespace lcsoc {

// Flat key/value scenario description as read from a preset or a config
// file; command-line flags may override individual fields afterwards.
//
// Recognized keys: characteristic (int, 0 = rationals), backend ("poly" or
// "semigroup"), uvars (string list), generators (string list of plain
// monomials, semigroup only), xvars (string list), xweights (int list,
// empty = searched), f (string), lmin / lmax / lstep / degcap / windowcap
// (ints).  Lines starting with '#' are comments; unknown or duplicate keys
// are rejected with the line number.
struct ScenarioSpec {
  std::int64_t characteristic = 32003;
  std::string backend = "poly";
  std::vector<std::string> uvars;
  std::vector<std::string> generators;
  std::vector<std::string> xvars;
  std::vector<int> xweights;
  std::string f;
  int lmin = 0;
  int lmax = 0;
  int lstep = 1;
  int degcap = 24;
  int windowcap = 200;
};

ScenarioSpec spec_from_config_text(const std::string& text, const std::string& origin);
ScenarioSpec spec_from_config_file(const std::string& path);

// Built-in scenario definitions, embedded at build time from share/presets.
const std::map<std::string, std::string>& preset_texts();
ScenarioSpec spec_from_preset(const std::string& name);

struct BuiltScenario {
  std::unique_ptr<Ring> ring;
  std::optional<Hypersurface> f;  // absent when the spec has no f
};

// Materializes the ring and hypersurface; throws ConfigError on any
// inconsistency the spec-level parse could not see.
BuiltScenario build_scenario(const ScenarioSpec& spec);

}  // namespace lcsoc
