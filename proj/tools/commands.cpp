#include "commands.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "nfbertrand/analytics.hpp"
#include "nfbertrand/bertrand.hpp"
#include "nfbertrand/errors.hpp"
#include "nfbertrand/sieve.hpp"
#include "verify_suite.hpp"

namespace nfb::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

// 15 significant digits, '.' decimal, no separators
std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

std::string sanitize(const std::string& label) {
    std::string out;
    for (char c : label)
        out += (std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
    return out;
}

std::filesystem::path ensure_out_dir(const RunConfig& config) {
    std::filesystem::path dir(config.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw io_error("cannot create output directory " + config.out_dir + ": " + ec.message());
    return dir;
}

CoefficientTable obtain_table(const NumberField& field, const RunConfig& config) {
    BuildOptions options;
    options.workers = config.workers;
    options.seed = config.seed;
    if (!config.use_cache) return CoefficientTable::build(field, config.limit, options);

    auto dir = ensure_out_dir(config) / ".cache";
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw io_error("cannot create cache directory: " + ec.message());
    auto path = dir / (sanitize(field.label) + "_" + std::to_string(config.limit) + ".nfbt");
    if (auto cached = CoefficientTable::load_cache(path.string(), field.label, config.limit))
        return std::move(*cached);
    CoefficientTable table = CoefficientTable::build(field, config.limit, options);
    table.save_cache(path.string());
    return table;
}

ordered_json report_to_json(const BoundReport& r) {
    ordered_json j;
    j["bound"] = r.bound_name;
    j["case"] = r.case_name.empty() ? ordered_json() : ordered_json(r.case_name);
    ordered_json constants = ordered_json::object();
    for (const auto& [k, v] : r.inputs) constants[k] = v;
    j["constants"] = constants;
    j["log_value"] = std::isfinite(r.log_value) ? ordered_json(r.log_value) : ordered_json();
    j["value"] = r.value ? ordered_json(*r.value) : ordered_json();
    j["units"] = r.units;
    if (r.range) {
        j["range"] = {r.range->first, r.range->second};
        j["empty"] = r.range_empty;
    }
    return j;
}

} // namespace

std::vector<NumberField> load_all_fields(const RunConfig& config) {
    if (config.field_paths.empty())
        throw validation_error("no field definition files given (use --fields)");
    std::vector<NumberField> fields;
    for (const auto& path : config.field_paths)
        for (auto& f : load_fields_file(path)) fields.push_back(std::move(f));
    return fields;
}

int cmd_field_info(const RunConfig& config) {
    for (const auto& field : load_all_fields(config)) {
        double rho = field.residue();
        std::cout << "field " << field.label << "\n"
                  << "  degree        " << field.degree << "\n"
                  << "  discriminant  " << field.discriminant << "\n"
                  << "  signature     (" << field.real_embeddings << "," << field.complex_embeddings
                  << ")\n"
                  << "  class_number  " << field.class_number << "\n"
                  << "  regulator     " << fmt(field.regulator) << "\n"
                  << "  roots_of_unity " << field.roots_of_unity << "\n"
                  << "  rho           " << fmt(rho) << "\n"
                  << "  friedman R/w  " << fmt(field.regulator / field.roots_of_unity) << "\n";
        if (field.degree >= 2) {
            auto mink = minkowski_check(field);
            std::cout << "  minkowski     lhs " << fmt(mink.lhs) << " rhs " << fmt(mink.rhs)
                      << " margin " << fmt(mink.margin) << (mink.ok ? " ok" : " VIOLATED") << "\n";
        }
    }
    return 0;
}

int cmd_count(const RunConfig& config) {
    auto dir = ensure_out_dir(config);
    std::vector<double> grid = config.grid;
    if (grid.empty())
        for (double x = 10; x <= double(config.limit); x *= 10) grid.push_back(x);

    for (const auto& field : load_all_fields(config)) {
        CoefficientTable table = obtain_table(field, config);
        auto path = dir / ("count_" + sanitize(field.label) + ".csv");
        std::ofstream out(path);
        if (!out) throw io_error("cannot write " + path.string());
        out << "x,ideal_count,main_term,f1,f2,pi_k,psi_k,mertens\n";
        double rho = field.residue();
        for (double x : grid) {
            if (x < 1 || x > double(config.limit)) {
                std::cerr << "warning: grid point " << fmt(x) << " outside [1, limit], row omitted\n";
                continue;
            }
            out << fmt(x) << ',' << table.count_ideals(x) << ',' << fmt(rho * x) << ','
                << fmt(f1(table, field, x)) << ',' << fmt(f2(table, field, x)) << ','
                << pi_k(table, x) << ',' << fmt(psi_k(table, x)) << ','
                << fmt(mertens_sum(table, x)) << '\n';
        }
        std::cout << "wrote " << path.string() << "\n";
    }
    return 0;
}

int cmd_gaps(const RunConfig& config) {
    auto dir = ensure_out_dir(config);
    for (const auto& field : load_all_fields(config)) {
        CoefficientTable table = obtain_table(field, config);
        GapReport report = scan_gaps(table, double(config.limit), config.top_k);
        ordered_json j;
        j["label"] = field.label;
        j["X"] = report.limit;
        j["b_lower"] = report.b_lower;
        j["witness"] = {report.witness.first, report.witness.second};
        ordered_json ratios = ordered_json::array();
        for (const auto& [r, pair] : report.top_ratios)
            ratios.push_back({{"ratio", r}, {"from", pair.first}, {"to", pair.second}});
        j["top_ratios"] = ratios;
        auto path = dir / ("gaps_" + sanitize(field.label) + ".json");
        std::ofstream out(path);
        if (!out) throw io_error("cannot write " + path.string());
        out << j.dump(2) << "\n";
        std::cout << field.label << ": B_K >= " << fmt(report.b_lower) << " witness ["
                  << report.witness.first << "," << report.witness.second << "]\n";
    }
    return 0;
}

int cmd_bounds(const RunConfig& config) {
    auto dir = ensure_out_dir(config);
    for (const auto& field : load_all_fields(config)) {
        config.constants.validate(field.degree);
        ordered_json reports = ordered_json::array();
        for (LoCase c : {LoCase::normal, LoCase::tower, LoCase::general, LoCase::grh})
            reports.push_back(report_to_json(report_lo_threshold(field, config.constants, c)));
        reports.push_back(report_to_json(report_sun_corollary(field, config.constants)));
        reports.push_back(report_to_json(report_maint_corollary(field, config.constants)));
        for (StarkCase c : {StarkCase::normal, StarkCase::tower, StarkCase::general})
            reports.push_back(report_to_json(report_stark_range(field, config.constants, c)));
        if (config.alpha) {
            CoefficientTable table = obtain_table(field, config);
            ErrorFit fit = fit_envelope(table, field, config.alpha);
            reports.push_back(report_to_json(report_bigt_log_a(fit, field, config.constants)));
        }
        auto path = dir / ("bounds_" + sanitize(field.label) + ".json");
        std::ofstream out(path);
        if (!out) throw io_error("cannot write " + path.string());
        out << reports.dump(2) << "\n";
        std::cout << "wrote " << path.string() << " (" << reports.size() << " reports)\n";
    }
    return 0;
}

int cmd_verify(const RunConfig& config) {
    auto dir = ensure_out_dir(config);
    std::vector<NumberField> fields;
    if (config.field_paths.empty()) {
        fields.push_back(load_field(R"json({"label":"Q(i)","quadratic_discriminant":-4})json"));
        fields.push_back(load_field(R"json({"label":"Q(sqrt(5))","quadratic_discriminant":5})json"));
        fields.push_back(
            load_field(R"json({"label":"Q(sqrt(-23))","quadratic_discriminant":-23})json"));
    } else {
        fields = load_all_fields(config);
    }

    VerifyOptions options;
    options.limit = config.limit;
    options.seed = config.seed;
    options.workers = config.workers;
    std::vector<CheckResult> results = run_verify_suite(fields, options);

    auto path = dir / "verify_report.txt";
    std::ofstream out(path);
    if (!out) throw io_error("cannot write " + path.string());
    int failed = 0;
    for (const auto& r : results) {
        const char* status = r.status == CheckStatus::pass ? "PASS"
                             : r.status == CheckStatus::warn ? "WARN"
                                                             : "FAIL";
        out << status << " " << r.name << (r.detail.empty() ? "" : " " + r.detail) << "\n";
        std::cout << status << " " << r.name << (r.detail.empty() ? "" : " " + r.detail) << "\n";
        if (r.status == CheckStatus::fail) ++failed;
    }
    out << (failed ? "FAILED" : "OK") << " " << results.size() - failed << "/" << results.size()
        << " checks passed\n";
    std::cout << (failed ? "FAILED" : "OK") << " " << results.size() - failed << "/"
              << results.size() << " checks passed\n";
    if (failed) throw computation_error(std::to_string(failed) + " verify checks failed");
    return 0;
}

} // namespace nfb::cli
