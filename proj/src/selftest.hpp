#ifndef FLATMORSE_SELFTEST_HPP
#define FLATMORSE_SELFTEST_HPP

#include <string>
#include <vector>

#include "verify.hpp"

namespace flatmorse {

struct SelftestCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SelftestReport {
  std::vector<SelftestCheck> criteria;
  bool all_pass = false;
  std::uint64_t seed = 0;
};

// The full verification suite: exact polynomial identities plus the
// numerical derivative, regularity, critical-point, and symmetry checks.
// Tolerances come from the config; any thrown error is recorded as a
// failed criterion rather than propagated.
SelftestReport run_selftest(const VerifyConfig& vc);

}  // namespace flatmorse

#endif
