#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace harmonia::verify {

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  std::vector<std::string> messages;
  bool pass() const { return failures == 0 && checks > 0; }
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  // self-test hook: corrupt computed Nochka weights before checking them, to
  // prove the checker catches bad data
  bool corrupt_nochka = false;
};

using SuiteFn = std::function<SuiteResult(const SuiteOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& all_suites();

// Runs the suites whose name contains `only` (all when empty).
std::vector<SuiteResult> run_suites(const SuiteOptions& opts, const std::string& only = "");

} // namespace harmonia::verify
