#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "nfbertrand/analytics.hpp"
#include "nfbertrand/field.hpp"

namespace nfb {

// User-configurable effective constants; the theorems assert these exist but
// never compute them. Every report embeds the snapshot it was evaluated with.
struct EffectiveConstants {
    double c1 = 1.0;
    double c2 = 1.0;
    double c3 = 1.0;
    double c4 = 1.0;
    double c_a = 10.0; // threshold constant; default matches x >= exp(10 d (log|Delta|)^2)
    double kappa = 1.0; // implied constant of the log A bound
    double big_m = 1.0; // constant of the zeta-based corollary
    double delta = 0.05; // requires 0 < delta < 1/(3d)
    double alpha = 1.0;  // discriminant-growth exponent of the general case, in [0,1]
    double zeta_tail_eps = 1e-6;
    std::uint64_t zeta_prime_cap = 10'000'000;

    void validate(int degree) const; // throws on nonpositive values or delta out of range
};

// log x-threshold / log bound value pairs; value is +inf when it overflows.
struct LogValue {
    double log_value;
    double value;
};

// Li(x) = int_2^x dt / log t, relative error < 1e-10. Li(2) = 0; x < 2 is an error.
double li(double x);

enum class LoCase { normal, tower, general, grh };
enum class StarkCase { normal, tower, general };

const char* to_string(LoCase c);
const char* to_string(StarkCase c);

// x-threshold beyond which a prime-ideal norm is guaranteed in [x, Ax]:
//   normal/tower: exp(c_a d (log|Delta|)^2)
//   general:      exp(c_a d (log d)^(2-2 alpha) (log|Delta|)^2)
//   grh:          c_a (log|Delta| + d)^2 log^4(log|Delta| + d)
LogValue lo_threshold(const NumberField& field, const EffectiveConstants& constants,
                      LoCase c, std::optional<double> alpha = {});

// e^(56d+5) (d+1)^(5(d+1)/2) |Delta|^(1/(d+1)) log^d|Delta| x^((d-1)/(d+1)),
// evaluated in log space.
LogValue sunley_envelope(const NumberField& field, double x);

// log A = kappa ((C_K / rho_K) (d+2)/(1-alpha) + d).
double bigt_log_a(const ErrorFit& fit, const NumberField& field, double kappa);

// kappa ( e^((5/2)(d+5)log(d+1) + (56-log2)d + 5) / h |Delta|^(1/2+1/(d+1)) log^d|Delta| + d ),
// as a bound on log B_K, in log space.
LogValue sun_corollary(const NumberField& field, const EffectiveConstants& constants);

struct MaintBound {
    double log_b;          // M (zeta_K(1+delta/2) |Delta|^delta / rho + sqrt|Delta| / h)
    ZetaValue zeta;        // the zeta_K evaluation that went in
};

// Evaluates zeta_K best-effort under the configured prime cap (a certified
// small tail is unreachable for small delta); report carries the achieved bound.
MaintBound maint_corollary(const NumberField& field, const EffectiveConstants& constants);

struct StarkRange {
    double lower;  // 1 - (4 log|Delta|)^(-1)
    double upper;  // case dependent
    bool empty;    // upper <= lower: no admissible exceptional zero
};

StarkRange stark_range(const NumberField& field, const EffectiveConstants& constants, StarkCase c);

// Convexity bound for zeta_K at eta + it given zeta_K(sigma):
// 3 (|Delta| (|1+eta+it|/2pi)^d)^((sigma-eta)/2) |1+eta+it|/|eta-1+it| zeta_K(sigma).
double rademacher_bound(const NumberField& field, double sigma, double eta, double t,
                        double zeta_sigma);

// A bound evaluation with its inputs snapshot, ready for serialization.
struct BoundReport {
    std::string bound_name;
    std::string case_name;             // "" when not case-split
    std::string units;                 // "x-threshold" | "log_B" | "B" | "range"
    double log_value = 0;
    std::optional<double> value;       // absent when it overflows
    std::optional<std::pair<double, double>> range;
    bool range_empty = false;
    std::map<std::string, double> inputs; // constants + field invariants snapshot
};

// Report assembly used by the CLI and the python module.
BoundReport report_lo_threshold(const NumberField&, const EffectiveConstants&, LoCase);
BoundReport report_sun_corollary(const NumberField&, const EffectiveConstants&);
BoundReport report_maint_corollary(const NumberField&, const EffectiveConstants&);
BoundReport report_stark_range(const NumberField&, const EffectiveConstants&, StarkCase);
BoundReport report_bigt_log_a(const ErrorFit&, const NumberField&, const EffectiveConstants&);

} // namespace nfb
