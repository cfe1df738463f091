#pragma once

#include <string>
#include <vector>

namespace easyq::cli {

struct CheckResult {
  std::string section;
  std::string name;
  bool passed = true;
  std::string detail;
};

std::vector<std::string> verify_sections();

/// Runs the named sections ("all" selects every one). Quick mode shrinks sizes
/// and sample counts so the whole suite takes seconds.
std::vector<CheckResult> run_verification(std::vector<std::string> const& sections, bool quick);

}  // namespace easyq::cli
