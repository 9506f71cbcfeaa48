#pragma once

// Internal: splitting record for a p already known to be prime, skipping the
// primality / fundamentality revalidation of the public entry points. Used by
// the sieve and the Euler-product evaluator, which iterate over sieved primes.

#include "nfbertrand/field.hpp"
#include "nfbertrand/splitting.hpp"

namespace nfb::detail {

inline SplittingRecord split_prime_fast(const NumberField& field, std::uint64_t p,
                                        std::uint64_t seed) {
    if (auto it = field.splitting_overrides.find(std::int64_t(p));
        it != field.splitting_overrides.end()) {
        SplittingRecord rec;
        rec.prime = std::int64_t(p);
        rec.factors = it->second;
        return rec;
    }
    SplittingRecord rec;
    rec.prime = std::int64_t(p);
    if (field.degree == 1) {
        rec.factors = {{1, 1}};
        return rec;
    }
    if (field.degree == 2) {
        switch (kronecker(field.discriminant, p)) {
            case 1: rec.factors = {{1, 1}, {1, 1}}; break;
            case -1: rec.factors = {{1, 2}}; break;
            default: rec.factors = {{2, 1}}; break;
        }
        return rec;
    }
    return split_monogenic(field.polynomial, std::int64_t(p), seed);
}

} // namespace nfb::detail
