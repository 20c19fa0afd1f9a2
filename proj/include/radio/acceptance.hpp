#pragma once

#include <iosfwd>

namespace radio {

// Runs the full acceptance suite, printing one line per check, and returns
// the number of failed checks. threads > 1 is forwarded to the exact solver;
// results do not depend on it.
int run_acceptance(std::ostream& out, int threads = 1);

}  // namespace radio
