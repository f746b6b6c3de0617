#pragma once

#include <cstdint>
#include <vector>

namespace ssq {

// Deterministic Miller-Rabin; the fixed witness set is exact for all n < 2^64.
bool is_prime(std::uint64_t n);

// Primes in the closed interval [lo, hi], ascending.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

}  // namespace ssq
