#include "nfbertrand/bertrand.hpp"

#include <algorithm>
#include <cmath>

#include "nfbertrand/errors.hpp"

namespace nfb {

namespace {
using u64 = std::uint64_t;
}

GapReport scan_gaps(const CoefficientTable& table, double X, int top_k) {
    if (X > double(table.limit()))
        throw validation_error("scan_gaps: X exceeds table limit");
    const auto& norms = table.prime_norms();
    auto end = std::upper_bound(norms.begin(), norms.end(), u64(X));
    if (norms.begin() == end)
        throw computation_error("scan_gaps: no prime-ideal norm <= X");

    GapReport report;
    report.limit = X;

    // distinct norms only; multiplicity is irrelevant to gaps
    std::vector<std::pair<double, std::pair<u64, u64>>> ratios;
    u64 first = norms.front();
    ratios.push_back({double(first), {1, first}}); // x -> 1+ forces B >= q_1
    u64 prev = first;
    for (auto it = norms.begin(); it != end; ++it) {
        if (*it == prev) continue;
        ratios.push_back({double(*it) / double(prev), {prev, *it}});
        prev = *it;
    }

    auto best = std::max_element(ratios.begin(), ratios.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
    report.b_lower = best->first;
    report.witness = best->second;

    std::sort(ratios.begin(), ratios.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    if (int(ratios.size()) > top_k) ratios.resize(top_k);
    report.top_ratios = std::move(ratios);
    return report;
}

std::optional<std::uint64_t> verify_interval(const CoefficientTable& table, double x, double B) {
    if (!(B >= 1)) throw validation_error("verify_interval: B must be >= 1");
    if (!(x >= 0)) throw validation_error("verify_interval: x must be nonnegative");
    if (B * x > double(table.limit()))
        throw validation_error("verify_interval: range exceeds table limit");
    const auto& norms = table.prime_norms();
    auto it = std::lower_bound(norms.begin(), norms.end(), u64(std::ceil(x)));
    // ceil can land below a fractional x (x=2.5 -> ceil 3 fine; x=2.0 -> 2 fine)
    while (it != norms.end() && double(*it) < x) ++it;
    if (it == norms.end() || double(*it) > B * x) return std::nullopt;
    return *it;
}

} // namespace nfb
