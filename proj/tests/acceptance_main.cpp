// Acceptance suite driver: one pass/fail line per criterion, nonzero exit
// if anything failed. The same checks back the CLI's `selftest` subcommand.

#include <cstdlib>
#include <iostream>
#include <string>

#include "benford/selftest.hpp"

int main(int argc, char** argv) {
    unsigned seed = 42;
    if (argc > 1) seed = static_cast<unsigned>(std::stoul(argv[1]));

    const auto results = benford::run_acceptance_suite(seed);
    bool all_ok = true;
    int index = 1;
    for (const auto& r : results) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << index++ << ". " << r.name;
        if (!r.detail.empty()) std::cout << " — " << r.detail;
        std::cout << "\n";
        all_ok = all_ok && r.passed;
    }
    std::cout << (all_ok ? "all criteria passed" : "SOME CRITERIA FAILED") << "\n";
    return all_ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
