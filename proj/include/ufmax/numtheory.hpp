// Small-integer number theory shared by the sieve, decomposer and solver.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ufmax {

std::vector<std::int64_t> primes_up_to(std::int64_t n);

bool is_prime(std::int64_t n);

/// Exponent of p in n (n > 0).
int valuation(std::int64_t n, std::int64_t p);

std::int64_t ipow(std::int64_t base, int exp);

/// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

/// Nonnegative remainder.
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// Prime factorization as (prime, exponent) pairs, ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

}  // namespace ufmax
