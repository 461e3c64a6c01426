#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "witt/certificate.hpp"

namespace witt {

/// Seeded property suites shared by `witt corpus` and the acceptance runner.
struct SuiteConfig {
  std::uint64_t seed = 1;
  std::size_t count = 0;  // 0 selects the suite default
  DecideOptions opts;
  long budget_ms = 120000;  // per instance, overridden by WITT_LGP_BUDGET_MS
};

struct SuiteReport {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::vector<std::string> failure_notes;  // first few failures
  std::vector<nlohmann::json> negative_certificates;
  double seconds = 0;
  std::string summary;

  bool passed() const { return instances > 0 && failures == 0; }
  nlohmann::json to_json() const;
};

/// flagship, bp-witness, sap, decomposable, jacobson, trace, hilbert, springer, completeness.
const std::vector<std::string>& suite_names();

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

/// Brute-force conic oracle for (a, b)_Q with a, b nonzero squarefree integers: true when a
/// modular or real obstruction is found, false when a point on z^2 = a x^2 + b y^2 is found with
/// height up to max_height, nullopt otherwise.
std::optional<bool> conic_oracle_division(long a, long b, long max_height = 10000);

}  // namespace witt
