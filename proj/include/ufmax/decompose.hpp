// Splitting a unit fraction into sums of distinct unit fractions.
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ufmax {

struct SplitRequest {
  std::int64_t n = 1;      // split 1/n
  int terms = 2;
  std::int64_t cap = 0;    // largest allowed denominator, 0 = unbounded
};

/// Every pair x < y with 1/n = 1/x + 1/y (and y <= cap when cap > 0),
/// ascending by x. Complete: one pair per divisor d < n of n^2.
std::vector<std::pair<std::int64_t, std::int64_t>> two_term_splits(std::int64_t n,
                                                                   std::int64_t cap = 0);

/// The factor recipe: for n = a*b with a < b, 1/n = 1/(b(a+b)) + 1/(a(a+b)).
/// Returns (smaller, larger) pairs ascending. Misses splits such as
/// 1/4 = 1/6 + 1/12; kept as a cross-check of two_term_splits.
std::vector<std::pair<std::int64_t, std::int64_t>> factor_recipe_splits(std::int64_t n);

/// The common-multiple method: for distinct divisors a, b, c of n,
/// 1/n = 1/(n s / a) + 1/(n s / b) + 1/(n s / c) with s = a + b + c.
/// Result ascending. Throws std::invalid_argument unless exactly three
/// distinct positive divisors are given.
std::array<std::int64_t, 3> lcm_three_term_split(std::int64_t n,
                                                 std::span<const std::int64_t> parts);

/// All sets of req.terms distinct denominators <= req.cap whose reciprocals
/// sum to 1/req.n, each ascending, listed lexicographically. cap must be > 0.
std::vector<std::vector<std::int64_t>> k_term_splits(const SplitRequest& req);

}  // namespace ufmax
