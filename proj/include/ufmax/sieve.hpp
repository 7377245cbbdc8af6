// p-adic residue filter: removes denominators that cannot appear in any
// exact representation of the target, iterated to a fixed point.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ufmax/rational.hpp"

namespace ufmax {

struct Exclusion {
  std::int64_t den = 0;
  /// Prime whose residue condition failed. 0 marks the size rule: 1/den
  /// alone already reaches the target.
  std::int64_t prime = 0;
  std::int64_t modulus = 0;
  int round = 0;
};

struct ExclusionReport {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  Rational target{1};
  std::vector<std::int64_t> kept;       // ascending
  std::vector<Exclusion> excluded;      // ascending by den
  int rounds = 0;                       // rounds run, including the final no-change round
};

struct SieveOptions {
  /// Exclude d with 1/d == target. A one-term representation is then
  /// no longer covered by the report.
  bool multi_term = true;
};

/// For a = p^v * u with gcd(u, p) = 1 and e >= v, returns
/// p^(e - v) * u^(-1) mod p^e. A set A of multiples of p has a reciprocal
/// sum with denominator prime to p exactly when the coefficients of A sum
/// to 0 mod p^e.
std::int64_t residue_coefficient(std::int64_t a, std::int64_t p, int e);

/// p^e * target reduced mod p^e, or nullopt when p^e * target is not
/// p-integral (no set of multiples of p with valuations <= e can absorb it).
std::optional<std::int64_t> target_residue(const Rational& target, std::int64_t p, int e);

/// Multiples a of p among `candidates` that belong to at least one subset of
/// the candidate multiples of p whose coefficients hit the target residue.
/// e is the largest valuation of p among the candidates.
std::vector<std::int64_t> prime_admissible_set(std::span<const std::int64_t> candidates,
                                               std::int64_t p,
                                               const Rational& target = Rational(1));

ExclusionReport sieve_candidates(std::span<const std::int64_t> candidates,
                                 const Rational& target = Rational(1),
                                 SieveOptions options = {});

ExclusionReport sieve_fixed_point(std::int64_t lo, std::int64_t hi,
                                  const Rational& target = Rational(1),
                                  SieveOptions options = {});

}  // namespace ufmax
