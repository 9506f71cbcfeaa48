#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nfb {

// Arithmetic invariants of a number field. Immutable once validated;
// safe to share across threads.
struct NumberField {
    int degree = 1;                       // d = [K:Q]
    std::int64_t discriminant = 1;        // Delta_K, signed
    int real_embeddings = 1;              // r1
    int complex_embeddings = 0;           // r2
    std::int64_t class_number = 1;        // h_K
    double regulator = 1.0;               // R_K
    int roots_of_unity = 2;               // w_K
    std::vector<std::int64_t> polynomial; // monic defining polynomial, ascending
                                          // coefficients; empty when unknown
    std::string label;

    // user-supplied splitting data for primes where the polynomial route
    // is unreliable (p^2 | disc)
    std::map<std::int64_t, std::vector<std::pair<int, int>>> splitting_overrides;

    double abs_disc() const { return discriminant < 0 ? -double(discriminant) : double(discriminant); }

    // Throws a validation Error naming the violated invariant.
    void validate() const;

    // rho_K = 2^r1 (2 pi)^r2 h R / (w sqrt|Delta|). Validates first.
    double residue() const;
};

struct MinkowskiCheck {
    bool ok;
    double lhs;    // d / |Delta|
    double rhs;    // (4/pi)^d (d!)^2 / d^(2d-1)
    double margin; // lhs / rhs
};

// d >= 2 required; K = Q is a validation error.
MinkowskiCheck minkowski_check(const NumberField& field);

bool is_fundamental_discriminant(std::int64_t D);

// Fundamental unit eps = (a + b sqrt(D)) / 2 of the real quadratic field of
// fundamental discriminant D > 0; a, b exact decimal strings (they overflow
// native integers well below D = 5000).
struct FundamentalUnit {
    std::string a;
    std::string b;
    int norm;         // a^2 - D b^2 = 4 * norm, norm in {-1, +1}
    double regulator; // log eps
};

FundamentalUnit fundamental_unit(std::int64_t D);

// Reduced primitive binary quadratic forms of discriminant D < 0.
std::int64_t imaginary_class_number(std::int64_t D);

// Cycles of reduced indefinite forms of discriminant D > 0 (narrow class number).
std::int64_t narrow_class_number(std::int64_t D);

// Internally computed invariants for a quadratic field of fundamental
// discriminant D (either sign).
struct QuadraticInvariants {
    std::int64_t class_number;
    double regulator;
    int roots_of_unity;
    int unit_norm; // 0 for imaginary fields
};

QuadraticInvariants quadratic_invariants(std::int64_t D);

// Builds a validated quadratic NumberField from a fundamental discriminant.
NumberField quadratic_field(std::int64_t D, const std::string& label = "");

// Field-definition documents (JSON text). Either
//   {"label":..., "quadratic_discriminant": D}
// or the full invariant set
//   {"label":..., "degree":..., "discriminant":..., "r1":..., "r2":...,
//    "class_number":..., "regulator":..., "roots_of_unity":...,
//    "polynomial":[c0,...,1], "splitting":[{"p":..., "factors":[[e,f],...]}]}
NumberField load_field(const std::string& json_text);
std::vector<NumberField> load_fields_file(const std::string& path);

} // namespace nfb
