#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chowforge/chow_ring.hpp"

namespace chowforge {

/// Closed-form colons compared with oracle colons over one ring.
struct ColonSuiteReport {
  long instances = 0;
  long inapplicable = 0;  // covering condition fails, so no closed form to compare
  std::map<std::string, long> by_rule;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
  std::string to_text() const;
};

/// samples < 0: every instance (up-sets capped at max_upsets per flat).
/// samples >= 0: that many random instances, spread over the rules.
ColonSuiteReport colon_suite(const ChowRing& r, long samples = -1, std::uint64_t seed = 1, long max_upsets = 4096);

}  // namespace chowforge
