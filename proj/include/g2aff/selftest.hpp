#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace g2aff {

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestReport {
  std::vector<SelftestCheck> checks;

  bool all_passed() const;
};

// Runs the structural invariants of every module. Search bounds grow
// linearly with `scale`; scale 4 reaches the bounds of the acceptance suite
// for most checks.
SelftestReport run_selftest(std::int64_t scale);

}  // namespace g2aff
