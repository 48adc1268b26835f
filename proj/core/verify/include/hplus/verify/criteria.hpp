#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hplus::verify {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    /// One-line summary of what was measured.
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    std::uint64_t seed = 20070607;
    /// 0 selects the default worker count.
    unsigned threads = 0;
};

struct Criterion {
    int id;
    std::string title;
    std::function<CriterionResult(const VerifyOptions&)> run;
};

/// All acceptance criteria, in order.
const std::vector<Criterion>& acceptance_criteria();

/// Runs every criterion (or only `only`, when non-empty), timing each.
/// Exceptions inside a criterion are reported as failures.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options, const std::vector<int>& only = {});

}  // namespace hplus::verify
