#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nfbertrand/bounds.hpp"
#include "nfbertrand/field.hpp"

namespace nfb::cli {

struct RunConfig {
    std::vector<std::string> field_paths;
    std::uint64_t limit = 100'000;
    std::string out_dir = ".";
    std::vector<double> grid;    // empty: powers of ten up to limit
    std::optional<double> alpha; // envelope exponent override
    bool use_cache = false;
    int workers = 1;
    std::uint64_t seed = kDefaultSeed;
    int top_k = 5;
    EffectiveConstants constants;
};

std::vector<NumberField> load_all_fields(const RunConfig& config);

int cmd_field_info(const RunConfig& config);
int cmd_count(const RunConfig& config);
int cmd_gaps(const RunConfig& config);
int cmd_bounds(const RunConfig& config);
int cmd_verify(const RunConfig& config);

} // namespace nfb::cli
