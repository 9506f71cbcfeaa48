#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nfbertrand/field.hpp"
#include "nfbertrand/splitting.hpp"

namespace nfb {

struct BuildOptions {
    std::uint64_t memory_cap = std::uint64_t(1) << 28; // max table entries
    int workers = 1;
    std::uint64_t seed = kDefaultSeed;
};

// Number of solutions of sum f_i a_i = k over nonnegative integers, where the
// f_i come from the splitting record of p: this is c_K(p^k).
std::uint64_t local_coefficient(const std::vector<std::pair<int, int>>& factors, int k);

// Dedekind zeta coefficients c_K(n) for n <= limit, the prime-power von
// Mangoldt table, and the sorted prime-ideal norm list. Immutable once built.
class CoefficientTable {
public:
    static CoefficientTable build(const NumberField& field, std::uint64_t limit,
                                  const BuildOptions& options = {});

    std::uint64_t limit() const { return limit_; }
    const std::string& field_label() const { return label_; }
    int field_degree() const { return degree_; }

    std::uint32_t coefficient(std::uint64_t n) const;
    const std::vector<std::uint32_t>& coefficients() const { return coeff_; } // index n, [1..limit]

    // Lambda_K^#(n); zero off prime powers.
    double mangoldt(std::uint64_t n) const;
    // sorted (p^k, Lambda_K^#(p^k)) support
    const std::vector<std::pair<std::uint64_t, double>>& mangoldt_support() const { return mangoldt_; }

    // prime-ideal norms <= limit, sorted, one entry per prime ideal
    const std::vector<std::uint64_t>& prime_norms() const { return norms_; }

    // sum_{n <= x} c_K(n); 1 <= x <= limit
    std::uint64_t count_ideals(double x) const;

    // prefix[n] = sum_{m <= n} c_K(m)
    const std::vector<std::uint64_t>& prefix_counts() const { return prefix_; }

    // cumulative sums aligned with mangoldt_support(): of Lambda^#(n) and of
    // Lambda^#(n)/n
    const std::vector<double>& mangoldt_prefix() const { return mangoldt_prefix_; }
    const std::vector<double>& mangoldt_over_n_prefix() const { return mangoldt_over_n_prefix_; }
    // cumulative log(q)/q aligned with prime_norms()
    const std::vector<double>& norm_log_ratio_prefix() const { return norm_log_ratio_prefix_; }

    void save_cache(const std::string& path) const;
    static std::optional<CoefficientTable> load_cache(const std::string& path,
                                                      const std::string& label,
                                                      std::uint64_t limit);

private:
    CoefficientTable() = default;
    void finalize();

    std::uint64_t limit_ = 0;
    std::string label_;
    int degree_ = 1;
    std::vector<std::uint32_t> coeff_;
    std::vector<std::uint64_t> prefix_;
    std::vector<std::pair<std::uint64_t, double>> mangoldt_;
    std::vector<std::uint64_t> norms_;
    std::vector<double> mangoldt_prefix_;
    std::vector<double> mangoldt_over_n_prefix_;
    std::vector<double> norm_log_ratio_prefix_;
};

} // namespace nfb
