#pragma once

#include <functional>
#include <string>
#include <vector>

#include "optimin/generators.hpp"

namespace optimin {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // expected versus actual on failure
};

/// Source of named instances; tests substitute a corrupted one.
using InstanceProvider = std::function<gen::Named(const std::string&)>;

/// Runs every golden example and returns one verdict per check, in a fixed order.
std::vector<CheckResult> run_selftest(const InstanceProvider& provider = gen::named, unsigned threads = 1);

/// One "PASS name" / "FAIL name: detail" line per check, then a summary line.
std::string format_selftest(const std::vector<CheckResult>& results);

}  // namespace optimin
