#pragma once

#include <string>
#include <vector>

namespace benford {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // measured values, and what failed when it failed
};

// The full acceptance suite: eleven independent checks covering the closed
// forms, the series and error machinery, the oracle, and the empirical
// layer. Deterministic for a fixed seed.
std::vector<CheckResult> run_acceptance_suite(unsigned seed = 42);

}  // namespace benford
