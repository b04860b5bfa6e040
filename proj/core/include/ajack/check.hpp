#pragma once

#include <string>
#include <vector>

namespace ajack {

/// Outcome of one named identity or comparison.
struct IdentityCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

inline bool all_ok(const std::vector<IdentityCheck>& checks) {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

}  // namespace ajack
