#include "nfbertrand/primes.hpp"

#include <cmath>

namespace nfb {

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    primes.reserve(limit > 16 ? std::size_t(double(limit) / std::log(double(limit)) * 1.2) : 8);
    primes.push_back(2);

    // odd-only bitmap: index i represents 2i+3
    std::uint64_t count = (limit >= 3) ? (limit - 3) / 2 + 1 : 0;
    std::vector<bool> composite(count, false);
    for (std::uint64_t i = 0; i < count; ++i) {
        if (composite[i]) continue;
        std::uint64_t p = 2 * i + 3;
        primes.push_back(p);
        if (p * p > limit) continue;
        for (std::uint64_t j = (p * p - 3) / 2; j < count; j += p) composite[j] = true;
    }
    return primes;
}

} // namespace nfb
