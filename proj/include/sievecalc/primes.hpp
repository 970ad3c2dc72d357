#pragma once

#include <cstdint>
#include <vector>

namespace sievecalc {

// Segmented sieve of Eratosthenes; returns exactly the primes <= limit.
std::vector<uint64_t> primes_up_to(uint64_t limit);

// Smallest-prime-factor table for [0, limit]; spf[0] = spf[1] = 0.
std::vector<uint32_t> spf_table(uint32_t limit);

bool is_prime_u64(uint64_t n);  // deterministic Miller-Rabin

}  // namespace sievecalc
