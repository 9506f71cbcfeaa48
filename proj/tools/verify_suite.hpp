#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nfbertrand/field.hpp"

namespace nfb::cli {

enum class CheckStatus { pass, warn, fail };

struct CheckResult {
    std::string name;
    CheckStatus status;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t limit = 100'000;
    std::uint64_t seed = 0x5EED;
    int workers = 1;
};

// Property suites of all modules at the configured scale. Deterministic under
// a fixed seed; calibration assertions degrade to WARN with the measured
// constant.
std::vector<CheckResult> run_verify_suite(const std::vector<NumberField>& fields,
                                          const VerifyOptions& options);

} // namespace nfb::cli
