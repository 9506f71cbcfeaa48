#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nfbertrand/field.hpp"
#include "nfbertrand/sieve.hpp"

namespace nfb {

// pi_K(x): number of prime ideals with norm <= x.
std::uint64_t pi_k(const CoefficientTable& table, double x);

// psi_K(x) = sum_{n <= x} Lambda_K^#(n).
double psi_k(const CoefficientTable& table, double x);

// f_1(x,K) = sum_{n <= x} c_K(n) - rho_K x.
double f1(const CoefficientTable& table, const NumberField& field, double x);

// f_2(x,K) = sum_{n <= x} c_K(n) log n - rho_K (x log x - x + 1).
double f2(const CoefficientTable& table, const NumberField& field, double x);

// sum over prime-ideal norms q <= x (with multiplicity) of log(q)/q.
double mertens_sum(const CoefficientTable& table, double x);

// sum_{n <= x} Lambda_K^#(n)/n - mertens_sum(x).
double phi_defect(const CoefficientTable& table, double x);

struct ZetaValue {
    double value;              // truncated Euler product
    double tail_bound;         // certified relative tail: value <= zeta_K <= value*(1+tail_bound)
    std::uint64_t prime_limit; // P actually used
};

// zeta_K(sigma) for sigma > 1 by truncated Euler product. P is chosen so the
// certified relative tail is < tail_eps; throws when that needs P beyond
// prime_cap unless best_effort, in which case P = prime_cap and the achieved
// bound is reported.
ZetaValue zeta_k(const NumberField& field, double sigma, double tail_eps,
                 std::uint64_t prime_cap = 10'000'000, bool best_effort = false);

struct ErrorFit {
    double alpha; // envelope exponent
    double c_k;   // max |f1(x)| / x^alpha over the grid
    std::vector<std::pair<double, double>> grid; // (x, f1(x))
};

// Envelope |f1(x,K)| <= C_K x^alpha over a grid that is dense below 10^3 and
// geometric up to the table limit. With alpha absent it is fitted by the
// least-squares slope of log|f1| against log x over grid points with
// x >= fit_min_x (default: the upper half of the grid by index).
ErrorFit fit_envelope(const CoefficientTable& table, const NumberField& field,
                      std::optional<double> alpha = {},
                      std::optional<double> fit_min_x = {});

} // namespace nfb
