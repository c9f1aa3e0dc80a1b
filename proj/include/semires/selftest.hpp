#pragma once

#include <string>
#include <vector>

namespace semires {

struct SelftestCheck {
  std::string group;  // "1".."4", or "examples"
  std::string name;
  bool passed = false;
  std::string detail;  // observed value or the exception text
};

/// The worked examples with their published values; criteria 1-4 plus the
/// remaining single-instance examples.
std::vector<SelftestCheck> run_selftest();

}  // namespace semires
