#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nfbertrand/sieve.hpp"

namespace nfb {

// Empirical lower bound for the Bertrand constant over (1, X]:
// b_lower = max(q_1, max_i q_{i+1}/q_i) over distinct prime-ideal norms <= X.
struct GapReport {
    double limit = 0;
    double b_lower = 1;
    // (q_i, q_{i+1}) achieving the max ratio; (1, q_1) when the leading norm
    // dominates
    std::pair<std::uint64_t, std::uint64_t> witness{0, 0};
    // top consecutive-norm ratios, descending; includes the leading entry
    std::vector<std::pair<double, std::pair<std::uint64_t, std::uint64_t>>> top_ratios;
};

GapReport scan_gaps(const CoefficientTable& table, double X, int top_k = 5);

// Some prime-ideal norm in [x, B x], or absence. B >= 1 and B*x <= limit.
std::optional<std::uint64_t> verify_interval(const CoefficientTable& table, double x, double B);

} // namespace nfb
