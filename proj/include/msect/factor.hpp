#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "msect/bigint.hpp"

namespace msect {

// Primes below 2^16, ascending.
const std::vector<std::uint32_t>& small_primes();

// 2 => definitely prime, 1 => probably prime (treated as prime), 0 => composite.
bool is_prime(const BigInt& n);

bool is_squarefree(std::int64_t n);

// Prime factorization of n != 0 (of |n|), ascending primes with multiplicities.
// Small-prime sieve plus Pollard rho for the cofactor; probable primes beyond
// 2^62 are accepted as prime.
std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n);
std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n);

// All positive divisors of |n|, ascending.
std::vector<BigInt> divisors(const BigInt& n);
std::vector<std::uint64_t> divisors_u64(std::uint64_t n);

}  // namespace msect
