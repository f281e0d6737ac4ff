#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace akp {

// All primes <= limit (plain sieve; used for base primes).
std::vector<std::uint64_t> small_primes(std::uint64_t limit);

// Calls visit(p) for every prime p in [lo, hi] in ascending order. The
// interval is sieved in fixed-size segments over odd numbers only.
void for_each_prime(std::uint64_t lo, std::uint64_t hi, const std::function<void(std::uint64_t)>& visit);

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);
std::uint64_t count_primes_in(std::uint64_t lo, std::uint64_t hi);

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);

}  // namespace akp
