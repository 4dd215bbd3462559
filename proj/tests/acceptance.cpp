// Acceptance gate: runs the full ten-criterion suite at production scale and
// prints one PASS/FAIL line per criterion. Exit status is nonzero if any
// criterion fails. All tolerances live in VerifyConfig and in the criterion
// bodies; nothing is adjustable from here.
#include <cstdio>

#include "selftest.hpp"

int main() {
  flatmorse::VerifyConfig vc;  // library defaults, seed included
  flatmorse::SelftestReport report = flatmorse::run_selftest(vc);
  for (const auto& c : report.criteria)
    std::printf("[%s] %s: %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                c.detail.c_str());
  std::printf("%s (seed %llu)\n",
              report.all_pass ? "ACCEPTANCE: all criteria passed"
                              : "ACCEPTANCE: FAILURES PRESENT",
              static_cast<unsigned long long>(report.seed));
  return report.all_pass ? 0 : 1;
}
