#include "nfbertrand/bounds.hpp"

#include <cmath>
#include <limits>

#include "nfbertrand/errors.hpp"

namespace nfb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_sum_exp(double a, double b) {
    if (a == -kInf) return b;
    if (b == -kInf) return a;
    double hi = std::max(a, b), lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

double exp_or_inf(double log_value) {
    return log_value > 709.0 ? kInf : std::exp(log_value);
}

double integrand(double t) { return 1.0 / std::log(t); }

double adaptive_simpson(double a, double b, double fa, double fm, double fb, double whole,
                        double eps, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = integrand(lm), frm = integrand(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * eps)
        return left + right + delta / 15.0;
    return adaptive_simpson(a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
           adaptive_simpson(m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

} // namespace

double li(double x) {
    if (!(x >= 2.0)) throw validation_error("li: x must be >= 2");
    if (x == 2.0) return 0.0;
    double fa = integrand(2.0), fb = integrand(x), fm = integrand(0.5 * (2.0 + x));
    double whole = (x - 2.0) / 6.0 * (fa + 4.0 * fm + fb);
    // absolute epsilon tuned off the coarse pass; integrand is positive
    double eps = std::max(1e-15, std::fabs(whole) * 1e-12);
    return adaptive_simpson(2.0, x, fa, fm, fb, whole, eps, 60);
}

void EffectiveConstants::validate(int degree) const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0)) throw validation_error(std::string("constants: ") + name + " must be positive");
    };
    positive(c1, "c1");
    positive(c2, "c2");
    positive(c3, "c3");
    positive(c4, "c4");
    positive(c_a, "c_a");
    positive(kappa, "kappa");
    positive(big_m, "M");
    positive(zeta_tail_eps, "zeta_tail_eps");
    if (!(alpha >= 0 && alpha <= 1))
        throw validation_error("constants: alpha must lie in [0,1]");
    if (!(delta > 0) || !(delta < 1.0 / (3.0 * degree)))
        throw validation_error("constants: delta must satisfy 0 < delta < 1/(3d)");
}

const char* to_string(LoCase c) {
    switch (c) {
        case LoCase::normal: return "normal";
        case LoCase::tower: return "tower";
        case LoCase::general: return "general";
        default: return "grh";
    }
}

const char* to_string(StarkCase c) {
    switch (c) {
        case StarkCase::normal: return "normal";
        case StarkCase::tower: return "tower";
        default: return "general";
    }
}

LogValue lo_threshold(const NumberField& field, const EffectiveConstants& constants, LoCase c,
                      std::optional<double> alpha) {
    if (field.degree < 2)
        throw validation_error("lo_threshold: not stated for K = Q (degree must be >= 2)");
    if (!(constants.c_a > 0)) throw validation_error("lo_threshold: c_a must be positive");
    const double d = field.degree;
    const double logd = std::log(d);
    const double logdisc = std::log(field.abs_disc());

    switch (c) {
        case LoCase::normal:
        case LoCase::tower: {
            double lv = constants.c_a * d * logdisc * logdisc;
            return {lv, exp_or_inf(lv)};
        }
        case LoCase::general: {
            double a = alpha.value_or(constants.alpha);
            if (!(a >= 0 && a <= 1))
                throw validation_error("lo_threshold: alpha must lie in [0,1]");
            double lv = constants.c_a * d * std::pow(logd, 2.0 - 2.0 * a) * logdisc * logdisc;
            return {lv, exp_or_inf(lv)};
        }
        default: {
            double base = logdisc + d;
            double value = constants.c_a * base * base * std::pow(std::log(base), 4.0);
            return {std::log(value), value};
        }
    }
}

LogValue sunley_envelope(const NumberField& field, double x) {
    if (!(x >= 1)) throw validation_error("sunley_envelope: x must be >= 1");
    const double d = field.degree;
    const double logdisc = std::log(field.abs_disc());
    double lv = (56.0 * d + 5.0) + (5.0 * (d + 1.0) / 2.0) * std::log(d + 1.0) +
                logdisc / (d + 1.0) + d * std::log(logdisc) +
                ((d - 1.0) / (d + 1.0)) * std::log(x);
    return {lv, exp_or_inf(lv)};
}

double bigt_log_a(const ErrorFit& fit, const NumberField& field, double kappa) {
    if (!(fit.alpha < 1)) throw validation_error("bigt_log_a: alpha must be < 1");
    if (!(kappa > 0)) throw validation_error("bigt_log_a: kappa must be positive");
    double rho = field.residue();
    return kappa * ((fit.c_k / rho) * (field.degree + 2.0) / (1.0 - fit.alpha) + field.degree);
}

LogValue sun_corollary(const NumberField& field, const EffectiveConstants& constants) {
    if (field.degree < 2)
        throw validation_error("sun_corollary: not stated for K = Q (degree must be >= 2)");
    const double d = field.degree;
    const double logdisc = std::log(field.abs_disc());
    double term_log = (5.0 / 2.0) * (d + 5.0) * std::log(d + 1.0) + (56.0 - M_LN2) * d + 5.0 -
                      std::log(double(field.class_number)) +
                      (0.5 + 1.0 / (d + 1.0)) * logdisc + d * std::log(logdisc);
    double lv = std::log(constants.kappa) + log_sum_exp(term_log, std::log(d));
    return {lv, exp_or_inf(lv)};
}

MaintBound maint_corollary(const NumberField& field, const EffectiveConstants& constants) {
    constants.validate(field.degree);
    const double delta = constants.delta;
    // a certified small tail is unreachable for sigma this close to 1; evaluate
    // at the cap and carry the achieved bound
    ZetaValue z = zeta_k(field, 1.0 + delta / 2.0, constants.zeta_tail_eps,
                         constants.zeta_prime_cap, /*best_effort=*/true);
    double rho = field.residue();
    double disc = field.abs_disc();
    double log_b = constants.big_m * (z.value * std::pow(disc, delta) / rho +
                                      std::sqrt(disc) / double(field.class_number));
    return {log_b, z};
}

StarkRange stark_range(const NumberField& field, const EffectiveConstants& constants, StarkCase c) {
    if (field.degree < 2) throw validation_error("stark_range: degree must be >= 2");
    double disc = field.abs_disc();
    if (!(disc >= 3)) throw validation_error("stark_range: |Delta| must be >= 3");
    const double d = field.degree;
    const double logdisc = std::log(disc);
    double lower = 1.0 - 1.0 / (4.0 * logdisc);
    double upper;
    switch (c) {
        case StarkCase::normal:
            upper = 1.0 - constants.c4 * std::pow(disc, -1.0 / d);
            break;
        case StarkCase::tower:
            upper = 1.0 - 1.0 / (16.0 * logdisc);
            break;
        default:
            upper = 1.0 - 1.0 / (4.0 * std::tgamma(d + 1.0) * logdisc);
            break;
    }
    return {lower, upper, upper <= lower};
}

double rademacher_bound(const NumberField& field, double sigma, double eta, double t,
                        double zeta_sigma) {
    if (!(sigma > 1 && sigma <= 1.5))
        throw validation_error("rademacher_bound: sigma must satisfy 1 < sigma <= 3/2");
    if (!(eta > 1 - sigma && eta < sigma))
        throw validation_error("rademacher_bound: eta must satisfy 1 - sigma < eta < sigma");
    if (!(zeta_sigma > 0)) throw validation_error("rademacher_bound: zeta_sigma must be positive");
    const double d = field.degree;
    double h1 = std::hypot(1.0 + eta, t);
    double h2 = std::hypot(eta - 1.0, t);
    double base = field.abs_disc() * std::pow(h1 / (2.0 * M_PI), d);
    return 3.0 * std::pow(base, (sigma - eta) / 2.0) * (h1 / h2) * zeta_sigma;
}

// ---- report assembly ---------------------------------------------------

namespace {

std::map<std::string, double> field_snapshot(const NumberField& f) {
    return {
        {"degree", double(f.degree)},
        {"abs_disc", f.abs_disc()},
        {"class_number", double(f.class_number)},
        {"regulator", f.regulator},
        {"roots_of_unity", double(f.roots_of_unity)},
        {"rho", f.residue()},
    };
}

} // namespace

BoundReport report_lo_threshold(const NumberField& field, const EffectiveConstants& constants,
                                LoCase c) {
    LogValue v = lo_threshold(field, constants, c);
    BoundReport r;
    r.bound_name = "lo_threshold";
    r.case_name = to_string(c);
    r.units = "x-threshold";
    r.log_value = v.log_value;
    if (std::isfinite(v.value)) r.value = v.value;
    r.inputs = field_snapshot(field);
    r.inputs["c_a"] = constants.c_a;
    if (c == LoCase::general) r.inputs["alpha"] = constants.alpha;
    return r;
}

BoundReport report_sun_corollary(const NumberField& field, const EffectiveConstants& constants) {
    LogValue v = sun_corollary(field, constants);
    BoundReport r;
    r.bound_name = "sunley_corollary";
    r.units = "log_B";
    r.log_value = v.log_value;
    if (std::isfinite(v.value)) r.value = v.value;
    r.inputs = field_snapshot(field);
    r.inputs["kappa"] = constants.kappa;
    return r;
}

BoundReport report_maint_corollary(const NumberField& field, const EffectiveConstants& constants) {
    MaintBound m = maint_corollary(field, constants);
    BoundReport r;
    r.bound_name = "maint_corollary";
    r.units = "log_B";
    r.log_value = std::log(m.log_b);
    r.value = m.log_b;
    r.inputs = field_snapshot(field);
    r.inputs["M"] = constants.big_m;
    r.inputs["delta"] = constants.delta;
    r.inputs["zeta_value"] = m.zeta.value;
    r.inputs["zeta_tail_bound"] = m.zeta.tail_bound;
    r.inputs["zeta_prime_limit"] = double(m.zeta.prime_limit);
    return r;
}

BoundReport report_stark_range(const NumberField& field, const EffectiveConstants& constants,
                               StarkCase c) {
    StarkRange s = stark_range(field, constants, c);
    BoundReport r;
    r.bound_name = "stark_range";
    r.case_name = to_string(c);
    r.units = "range";
    r.log_value = std::numeric_limits<double>::quiet_NaN();
    r.range = std::make_pair(s.lower, s.upper);
    r.range_empty = s.empty;
    r.inputs = field_snapshot(field);
    if (c == StarkCase::normal) r.inputs["c4"] = constants.c4;
    return r;
}

BoundReport report_bigt_log_a(const ErrorFit& fit, const NumberField& field,
                              const EffectiveConstants& constants) {
    double v = bigt_log_a(fit, field, constants.kappa);
    BoundReport r;
    r.bound_name = "bigt_log_a";
    r.units = "log_B";
    r.log_value = std::log(v);
    r.value = v;
    r.inputs = field_snapshot(field);
    r.inputs["kappa"] = constants.kappa;
    r.inputs["c_k"] = fit.c_k;
    r.inputs["alpha"] = fit.alpha;
    return r;
}

} // namespace nfb
