#pragma once

#include <stdexcept>
#include <string>

namespace lcsoc {

// Invalid configuration: bad characteristic, mismatched scalar backends,
// malformed ring descriptors.  Maps to CLI exit code 2.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated operation precondition (dimension mismatch, division by zero,
// calling a semigroup-only operation on the polynomial backend, ...).
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Expression or config-file syntax error.  Carries the byte offset and the
// offending token so the CLI can point at the problem.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t position, std::string token)
      : std::runtime_error(msg + " at position " + std::to_string(position) +
                           (token.empty() ? "" : " near '" + token + "'")),
        pos(position),
        tok(std::move(token)) {}
  std::size_t pos;
  std::string tok;
};

// A scenario hypothesis does not hold (e.g. the two-term shape required by
// the L-summand operations).  The message names the violated hypothesis.
struct ScenarioError : std::runtime_error {
  explicit ScenarioError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace lcsoc
