#pragma once

#include <string>
#include <vector>

namespace qsearch::checks {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // one line of numeric evidence
};

// The full identity/oracle battery at desk scale: closed forms against
// simulation, dense materializations against structural identities, Monte
// Carlo against analytic probabilities, and output reproducibility.
// Deterministic; every tolerance is pinned in the implementation.
std::vector<CheckResult> run_all();

}  // namespace qsearch::checks
