#pragma once

#include <string>
#include <vector>

namespace quadlab {

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the quick invariant suite (seeded, deterministic). Each check is
/// reported separately; an exception inside a check counts as a failure.
std::vector<SelftestCheck> run_selftest(unsigned threads = 0);

}  // namespace quadlab
