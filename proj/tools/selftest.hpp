#pragma once

#include <ostream>

namespace ck::cli {

// Quick invariant suite; prints one PASS/FAIL line per check. Returns the failure count.
int run_selftest(std::ostream& out);

}  // namespace ck::cli
