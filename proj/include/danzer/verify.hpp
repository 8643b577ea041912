#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace danzer {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

enum class Suite { Relations, Orbits, Rules, Lifts };

/// Throws std::invalid_argument for unknown names; "all" is handled by callers.
Suite parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

/// Runs every exact check of a suite. Never throws for a failing check; an
/// exception inside a check is reported as a failure with its message.
std::vector<Check> run_suite(Suite s);

}  // namespace danzer
