#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "commands.hpp"
#include "nfbertrand/errors.hpp"

namespace {

// --constants accepts inline JSON or @file
void apply_constants(nfb::cli::RunConfig& config, const std::string& spec) {
    std::string text = spec;
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw nfb::io_error("cannot open constants file " + spec.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw nfb::validation_error(std::string("constants JSON parse error: ") + e.what());
    }
    auto& k = config.constants;
    k.c1 = j.value("c1", k.c1);
    k.c2 = j.value("c2", k.c2);
    k.c3 = j.value("c3", k.c3);
    k.c4 = j.value("c4", k.c4);
    k.c_a = j.value("c_a", k.c_a);
    k.kappa = j.value("kappa", k.kappa);
    k.big_m = j.value("M", k.big_m);
    k.delta = j.value("delta", k.delta);
    k.alpha = j.value("alpha", k.alpha);
    k.zeta_tail_eps = j.value("zeta_tail_eps", k.zeta_tail_eps);
    k.zeta_prime_cap = j.value("zeta_prime_cap", k.zeta_prime_cap);
}

void add_common(CLI::App* cmd, nfb::cli::RunConfig& config, std::string& constants_spec) {
    cmd->add_option("--fields", config.field_paths, "field definition JSON file(s)");
    cmd->add_option("--limit", config.limit, "coefficient table limit X");
    cmd->add_option("--out", config.out_dir, "output directory");
    cmd->add_flag("--cache", config.use_cache, "cache coefficient tables on disk");
    cmd->add_option("--workers", config.workers, "parallel workers for table builds")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", config.seed, "seed for randomized algorithms");
    cmd->add_option("--constants", constants_spec, "effective constants JSON (inline or @file)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"number-field ideal counting, prime-ideal gaps, and effective bounds"};
    app.require_subcommand(1);

    nfb::cli::RunConfig config;
    std::string constants_spec;
    std::string grid_spec;
    double alpha = -1, delta = -1;

    auto* info = app.add_subcommand("field-info", "print invariants, rho, Minkowski margin");
    add_common(info, config, constants_spec);

    auto* count = app.add_subcommand("count", "ideal counts and error terms over a grid, as CSV");
    add_common(count, config, constants_spec);
    count->add_option("--grid", grid_spec, "comma-separated x values (default: powers of 10)");

    auto* gaps = app.add_subcommand("gaps", "empirical Bertrand constant lower bound, as JSON");
    add_common(gaps, config, constants_spec);
    gaps->add_option("--top", config.top_k, "number of top ratios to report");

    auto* bounds = app.add_subcommand("bounds", "evaluate the effective bound expressions, as JSON");
    add_common(bounds, config, constants_spec);
    bounds->add_option("--alpha", alpha, "envelope exponent; adds the measured-fit log A report");
    bounds->add_option("--delta", delta, "delta for the zeta-based corollary (0 < delta < 1/(3d))");

    auto* verify = app.add_subcommand("verify", "run the module property suites at a given scale");
    add_common(verify, config, constants_spec);

    CLI11_PARSE(app, argc, argv);

    try {
        if (!constants_spec.empty()) apply_constants(config, constants_spec);
        if (alpha >= 0) config.alpha = alpha;
        if (delta >= 0) config.constants.delta = delta;
        if (!grid_spec.empty()) {
            std::stringstream ss(grid_spec);
            std::string item;
            while (std::getline(ss, item, ',')) config.grid.push_back(std::stod(item));
        }

        if (*info) return nfb::cli::cmd_field_info(config);
        if (*count) return nfb::cli::cmd_count(config);
        if (*gaps) return nfb::cli::cmd_gaps(config);
        if (*bounds) return nfb::cli::cmd_bounds(config);
        if (*verify) return nfb::cli::cmd_verify(config);
    } catch (const nfb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case nfb::ErrorKind::validation: return 2;
            case nfb::ErrorKind::computation: return 3;
            case nfb::ErrorKind::io: return 4;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
