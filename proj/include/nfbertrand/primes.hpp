#pragma once

#include <cstdint>
#include <vector>

namespace nfb {

// All primes <= limit, ascending. Simple odd-only sieve; fine up to ~10^8.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

} // namespace nfb
