#pragma once

#include <ostream>

namespace catbreed {

// Desk-scale oracle-equivalence checks: dyad-algebra breeding and loss
// results against the truncated-Fock pipelines. Prints one line per check;
// returns true when everything passes.
bool run_selftest(std::ostream& os);

}  // namespace catbreed
