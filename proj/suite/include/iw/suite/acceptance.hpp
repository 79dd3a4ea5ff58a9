#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace iw::suite {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    long checks = 0;
    long failures = 0;
    std::vector<std::string> witnesses;  // first few failing inputs, or a summary line
    double seconds = 0;
};

struct SuiteConfig {
    std::uint64_t seed = 1;
    std::vector<int> only;  // empty: every criterion
};

const std::vector<std::string>& criterion_names();

CriterionResult run_criterion(int id, std::uint64_t seed);

/// Runs the selected criteria in order; `on_result` sees each result as soon as it is known.
std::vector<CriterionResult> run_suite(const SuiteConfig& cfg,
                                       const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace iw::suite
