#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spinor_s3 {

enum class Suite { casimir, quadratic, spectrum, transfer, dirac, laplace, integral, gram };

/// Every suite, in report order.
const std::vector<Suite>& all_suites();
std::string to_string(Suite suite);
/// Parses one suite name; nullopt for unknown names.
std::optional<Suite> suite_from_string(const std::string& name);

/// Largest k each suite runs to when no explicit k_max is given.
int default_k_max(Suite suite);

struct VerifyOptions {
  /// Overrides every suite's default range when set.
  std::optional<int> k_max;
  unsigned threads = 1;
  std::uint64_t mc_samples = 1'000'000;
  std::uint64_t mc_seed = 20240601;
};

struct CheckResult {
  Suite suite = Suite::casimir;
  /// -1 for checks not tied to a single k.
  int k = -1;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the suites; independent (suite, k) items may run concurrently but
/// the result order is (suite order, k, check order) regardless.
std::vector<CheckResult> run_suites(const std::vector<Suite>& suites, const VerifyOptions& options);

/// Checks for one (suite, k) item; k is ignored by the integral suite.
std::vector<CheckResult> run_suite_item(Suite suite, int k, const VerifyOptions& options);

}  // namespace spinor_s3
