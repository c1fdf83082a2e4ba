#pragma once

// Self-test suites behind `lrkm verify`.

#include <functional>
#include <string>
#include <vector>

#include "lrkm/real.hpp"

namespace lrkm::cli {

struct VerifyOptions {
  /// Gamma implementation checked by "gamma accuracy"; replaced in tests to
  /// make sure the check can fail.
  std::function<real(const real&)> gamma;
};

struct PropertyResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// suite is one of fracops, kernel, solver, all.  Throws std::invalid_argument
/// for any other name.
std::vector<PropertyResult> run_verify(const std::string& suite, const VerifyOptions& options);

}  // namespace lrkm::cli
