#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace unfoldium {

struct Check {
  std::string id;
  std::string description;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerificationReport {
  std::vector<Check> checks;

  [[nodiscard]] std::size_t passed() const;
  [[nodiscard]] std::size_t total() const { return checks.size(); }
  [[nodiscard]] bool all_passed() const { return passed() == total(); }
};

struct VerifyOptions {
  /// Swap the third-turn generator for the face half turn, so the closure is
  /// too small. Exercises the failure path of the group-order check.
  bool inject_bad_generator = false;
};

/// Runs every replication check end to end.
[[nodiscard]] VerificationReport run_verification(const VerifyOptions& options = {});

[[nodiscard]] nlohmann::json to_json(const VerificationReport& report);

}  // namespace unfoldium
