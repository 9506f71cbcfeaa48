#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nfb {

struct NumberField;

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

// Splitting type of a rational prime p: one (e_i, f_i) entry per prime ideal
// above p. Sum e_i f_i = d always.
struct SplittingRecord {
    std::int64_t prime = 0;
    std::vector<std::pair<int, int>> factors; // (ramification e, residue degree f)
    bool reliable = true; // false when p^2 | disc(poly) and Dedekind's criterion
                          // would be needed

    int degree() const {
        int d = 0;
        for (auto [e, f] : factors) d += e * f;
        return d;
    }
};

// Kronecker symbol (D/n), completely multiplicative in n; n >= 1.
int kronecker(std::int64_t D, std::uint64_t n);

// Quadratic splitting from the Kronecker symbol: +1 split, -1 inert, 0 ramified.
SplittingRecord split_quadratic(std::int64_t D, std::int64_t p);

// Factorization of a monic integer polynomial mod p; record is flagged
// unreliable when p^2 | disc(poly).
SplittingRecord split_monogenic(const std::vector<std::int64_t>& poly, std::int64_t p,
                                std::uint64_t seed = kDefaultSeed);

// Splitting for a general field: trivial for d = 1, Kronecker rule for
// quadratic fields, polynomial factorization otherwise (honouring the
// field's splitting_overrides).
SplittingRecord split_prime(const NumberField& field, std::int64_t p,
                            std::uint64_t seed = kDefaultSeed);

// Monic factor of a polynomial mod p with multiplicity; coefficients ascending.
struct PolyFactor {
    std::vector<std::uint64_t> coeffs;
    int multiplicity;
};

// Full factorization of a monic polynomial over F_p: squarefree split,
// distinct-degree, then randomized equal-degree (Cantor-Zassenhaus) with a
// deterministic root-search fallback for small p.
std::vector<PolyFactor> factor_mod_p(const std::vector<std::int64_t>& poly, std::int64_t p,
                                     std::uint64_t seed = kDefaultSeed);

// disc(poly) of a monic integer polynomial, exact, as a decimal string.
std::string poly_discriminant(const std::vector<std::int64_t>& poly);

// True when p^2 divides disc(poly).
bool disc_divisible_by_p2(const std::vector<std::int64_t>& poly, std::int64_t p);

} // namespace nfb
