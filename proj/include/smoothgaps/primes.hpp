#pragma once

#include <cstdint>
#include <vector>

namespace smoothgaps {

// All primes p <= n, increasing. Simple sieve of Eratosthenes; the bounds
// used in this project stay well below the point where a segmented sieve
// would pay off.
std::vector<std::uint64_t> primes_upto(std::uint64_t n);

// Primes in the half-open window (lo, hi].
std::vector<std::uint64_t> primes_in(double lo, double hi);

// Largest r with r^k <= n (exact integer arithmetic, no pow rounding).
std::uint64_t integer_kth_root(std::uint64_t n, unsigned k);

// Number of prime factors counted with multiplicity; omega_with_mult(1) = 0.
int omega_with_mult(std::uint64_t n);

}  // namespace smoothgaps
