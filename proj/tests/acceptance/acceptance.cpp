// One PASS/FAIL line per acceptance criterion at the full orders; exit status 0 iff all pass.

#include <cstdio>

#include "ajack/suite.hpp"

int main() {
  bool all = true;
  for (const auto& r : ajack::run_acceptance(false)) {
    std::printf("%s %s %s: %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.title.c_str(), r.detail.c_str(),
                r.seconds);
    if (!r.pass) {
      all = false;
      for (const auto& c : r.checks)
        if (!c.ok) std::printf("    failed: %s: %s\n", c.name.c_str(), c.detail.c_str());
    }
  }
  std::fflush(stdout);
  return all ? 0 : 1;
}
