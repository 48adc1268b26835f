#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "hplus/verify/criteria.hpp"

// Prints one PASS/FAIL line per acceptance criterion.
// Optional arguments restrict the run to the listed criterion ids.
int main(int argc, char** argv) {
    std::vector<int> only;
    for (int a = 1; a < argc; ++a) only.push_back(std::atoi(argv[a]));

    hplus::verify::VerifyOptions options;
    const auto results = hplus::verify::run_acceptance(options, only);
    int failed = 0;
    for (const auto& r : results) {
        std::printf("[%s] criterion %2d: %s -- %s (%.2fs)\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(),
                    r.detail.c_str(), r.seconds);
        failed += !r.passed;
    }
    std::printf("%zu criteria, %d failed\n", results.size(), failed);
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
