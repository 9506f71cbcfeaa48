#include "nfbertrand/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nfbertrand/errors.hpp"
#include "nfbertrand/primes.hpp"
#include "split_fast.hpp"

namespace nfb {

namespace {

using u64 = std::uint64_t;

void check_range(const CoefficientTable& table, double x, const char* who) {
    if (!(x >= 1) || x > double(table.limit()))
        throw validation_error(std::string(who) + ": x out of range [1, limit]");
}

} // namespace

std::uint64_t pi_k(const CoefficientTable& table, double x) {
    check_range(table, x, "pi_k");
    const auto& norms = table.prime_norms();
    return u64(std::upper_bound(norms.begin(), norms.end(), u64(x)) - norms.begin());
}

double psi_k(const CoefficientTable& table, double x) {
    check_range(table, x, "psi_k");
    const auto& support = table.mangoldt_support();
    auto it = std::upper_bound(support.begin(), support.end(),
                               std::make_pair(u64(x), std::numeric_limits<double>::infinity()));
    auto idx = std::size_t(it - support.begin());
    return idx == 0 ? 0.0 : table.mangoldt_prefix()[idx - 1];
}

double f1(const CoefficientTable& table, const NumberField& field, double x) {
    check_range(table, x, "f1");
    return double(table.count_ideals(x)) - field.residue() * x;
}

double f2(const CoefficientTable& table, const NumberField& field, double x) {
    check_range(table, x, "f2");
    const auto& c = table.coefficients();
    long double sum = 0;
    const u64 n = u64(x);
    for (u64 m = 2; m <= n; ++m)
        if (c[m]) sum += (long double)(c[m]) * std::log(double(m));
    return double(sum - (long double)(field.residue()) * (x * std::log(x) - x + 1.0));
}

double mertens_sum(const CoefficientTable& table, double x) {
    check_range(table, x, "mertens_sum");
    const auto& norms = table.prime_norms();
    auto idx = std::size_t(std::upper_bound(norms.begin(), norms.end(), u64(x)) - norms.begin());
    return idx == 0 ? 0.0 : table.norm_log_ratio_prefix()[idx - 1];
}

double phi_defect(const CoefficientTable& table, double x) {
    check_range(table, x, "phi_defect");
    const auto& support = table.mangoldt_support();
    auto it = std::upper_bound(support.begin(), support.end(),
                               std::make_pair(u64(x), std::numeric_limits<double>::infinity()));
    auto idx = std::size_t(it - support.begin());
    double lhs = idx == 0 ? 0.0 : table.mangoldt_over_n_prefix()[idx - 1];
    return lhs - mertens_sum(table, x);
}

ZetaValue zeta_k(const NumberField& field, double sigma, double tail_eps,
                 std::uint64_t prime_cap, bool best_effort) {
    field.validate();
    if (!(sigma > 1)) throw validation_error("zeta_k: sigma must exceed 1");
    if (!(tail_eps > 0)) throw validation_error("zeta_k: tail_eps must be positive");
    if (prime_cap < 2) throw validation_error("zeta_k: prime cap too small");

    const double d = field.degree;
    const double K = 1.0 / (1.0 - std::pow(2.0, -sigma)); // -log(1-t) <= K t for t <= 2^-sigma

    // smallest P with d K P^(1-sigma)/(sigma-1) <= log1p(tail_eps)
    double target = std::log1p(tail_eps);
    double log_p_req = std::log(d * K / ((sigma - 1.0) * target)) / (sigma - 1.0);
    u64 P;
    if (log_p_req <= std::log(2.0)) {
        P = 2;
    } else if (log_p_req > std::log(double(prime_cap))) {
        if (!best_effort)
            throw computation_error("zeta_k: certified tail " + std::to_string(tail_eps) +
                                    " unreachable under prime cap " + std::to_string(prime_cap));
        P = prime_cap;
    } else {
        P = u64(std::ceil(std::exp(log_p_req)));
        if (P < 2) P = 2;
        if (P > prime_cap) P = prime_cap;
    }

    long double log_value = 0;
    for (u64 p : sieve_primes(P)) {
        SplittingRecord rec = detail::split_prime_fast(field, p, kDefaultSeed);
        for (auto [e, f] : rec.factors) {
            (void)e;
            log_value -= std::log1p(-std::pow(double(p), -sigma * f));
        }
    }

    double achieved = std::expm1(d * K * std::pow(double(P), 1.0 - sigma) / (sigma - 1.0));
    return {double(std::exp(log_value)), achieved, P};
}

ErrorFit fit_envelope(const CoefficientTable& table, const NumberField& field,
                      std::optional<double> alpha, std::optional<double> fit_min_x) {
    if (table.limit() < 100)
        throw validation_error("fit_envelope: table limit must be >= 100");
    if (alpha && !(*alpha > 0 && *alpha < 1))
        throw validation_error("fit_envelope: alpha must lie in (0,1)");

    const double X = double(table.limit());
    std::vector<double> xs;
    const u64 dense = std::min<u64>(1000, table.limit());
    for (u64 n = 1; n <= dense; ++n) xs.push_back(double(n));
    if (X > 1000.0) {
        const int points = 1000;
        const double ratio = std::log(X / 1000.0) / points;
        for (int j = 1; j <= points; ++j) xs.push_back(1000.0 * std::exp(ratio * j));
    }

    ErrorFit fit;
    fit.grid.reserve(xs.size());
    for (double x : xs) fit.grid.emplace_back(x, f1(table, field, x));

    double a;
    if (alpha) {
        a = *alpha;
    } else {
        double min_x = fit_min_x ? *fit_min_x : fit.grid[fit.grid.size() / 2].first;
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int n = 0;
        for (const auto& [x, r] : fit.grid) {
            if (x < min_x || std::fabs(r) < 1e-12) continue;
            double lx = std::log(x), ly = std::log(std::fabs(r));
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
            ++n;
        }
        if (n < 2) throw computation_error("fit_envelope: degenerate fit, all residuals zero");
        double det = n * sxx - sx * sx;
        if (det == 0) throw computation_error("fit_envelope: degenerate fit grid");
        a = (n * sxy - sx * sy) / det;
        if (!(a > 0 && a < 1))
            throw computation_error("fit_envelope: fitted alpha " + std::to_string(a) +
                                    " outside (0,1)");
    }

    double c_k = 0;
    for (const auto& [x, r] : fit.grid) c_k = std::max(c_k, std::fabs(r) / std::pow(x, a));

    fit.alpha = a;
    fit.c_k = c_k;
    return fit;
}

} // namespace nfb
