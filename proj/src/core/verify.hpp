#pragma once

#include "code_core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rankmetric {

enum class VerifyLevel { desk, exhaustive };

VerifyLevel parse_verify_level(const std::string& text);
std::string to_string(VerifyLevel level);

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::desk;
  bool mutate_transform = false;  // flip the transform sign to check that the suite notices
  std::uint64_t seed = 20201;
  EnumOptions enumeration{};
};

struct Counterexample {
  std::string code_file;  // empty when the failing case is not a code
  std::string input;      // human-readable description of the case
  std::string expected;
  std::string actual;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string detail;
  std::optional<Counterexample> counterexample;
};

struct VerifyReport {
  VerifyLevel level = VerifyLevel::desk;
  std::vector<CheckResult> checks;

  bool passed() const;
};

// Runs every cross-oracle check. Each check stops at its first failure.
VerifyReport run_verification(const VerifyOptions& opt = {});

// Writes each counterexample as <dir>/<check>.rankcode (code cases) or
// <dir>/<check>.txt; returns the paths written.
std::vector<std::string> dump_counterexamples(const VerifyReport& report, const std::string& dir);

}  // namespace rankmetric
