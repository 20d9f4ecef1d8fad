#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace g2forge::cli {

struct CheckResult {
  std::string id;
  bool passed = false;
  std::string expected;
  std::string actual;
  std::string anchor;  ///< the identity being checked, in words
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;  ///< sorted by id
  nlohmann::json pairing;           ///< pairing report, null unless the pairing suite ran
  std::optional<double> wall_seconds;

  bool passed() const;
};

struct RunOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 100000;  ///< Monte-Carlo samples per test element
  std::size_t randomized = 100;  ///< random instances per randomized identity
  unsigned workers = 0;          ///< 0 = hardware concurrency
};

const std::vector<std::string>& suite_names();  ///< "all" first
bool is_suite(const std::string& name);

/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& name, const RunOptions& options);

nlohmann::json to_json(const SuiteReport& r);
std::string to_text(const SuiteReport& r);

}  // namespace g2forge::cli
