#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ellbasis {

// Word-size integer helpers.
uint64_t mulmod(uint64_t a, uint64_t b, uint64_t n);
uint64_t powmod(uint64_t a, uint64_t e, uint64_t n);
uint64_t invmod(uint64_t a, uint64_t n);  // throws NotInvertible
bool is_prime(uint64_t n);

// Prime factorization as (prime, exponent) pairs, primes increasing.
std::vector<std::pair<uint64_t, int>> factor(uint64_t n);
std::vector<uint64_t> prime_divisors(uint64_t n);

// q = p^m with p prime, or nullopt.
std::optional<std::pair<uint64_t, int>> prime_power(uint64_t q);

uint64_t euler_phi(uint64_t n);
int valuation(uint64_t n, uint64_t l);
uint64_t isqrt(uint64_t n);
uint64_t ipow(uint64_t b, int e);  // throws BoundExceeded on overflow
int popcount64(uint64_t x);
int floor_log2(uint64_t x);

}  // namespace ellbasis
