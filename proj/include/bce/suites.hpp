#pragma once

// Named property suites run by `bce suite <name>`.

#include <cstdint>
#include <string>
#include <vector>

namespace bce {

struct CheckResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::string first_failure;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool ok() const;
  /// One line per check plus a summary; failures name the reproduction seed.
  std::string str() const;
};

const std::vector<std::string>& suite_names();

/// Throws bce::Error for an unknown suite name.
SuiteReport run_suite(const std::string& name, std::uint64_t seed = 0);

}  // namespace bce
