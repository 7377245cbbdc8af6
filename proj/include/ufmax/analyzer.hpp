// Structure of a solution set: shared denominators, usage counts, and the
// term swaps that turn one solution into another.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "ufmax/rational.hpp"
#include "ufmax/solver.hpp"

namespace ufmax {

/// Denominators present in every solution. Throws on an empty list.
std::vector<std::int64_t> common_core(std::span<const Solution> solutions);

/// How many solutions contain each denominator.
std::map<std::int64_t, std::size_t> frequency_table(std::span<const Solution> solutions);

struct SwapRelation {
  std::size_t first = 0;
  std::size_t second = 0;
  std::vector<std::int64_t> only_in_first;
  std::vector<std::int64_t> only_in_second;
  /// Reciprocal sum of only_in_first.
  Rational common_value;
  /// Reciprocal sum of only_in_second; equals common_value whenever both
  /// solutions reach the same target.
  Rational other_value;

  bool balanced() const { return common_value == other_value; }
  std::size_t size() const { return std::max(only_in_first.size(), only_in_second.size()); }
};

SwapRelation swap_relation(const Solution& a, const Solution& b, std::size_t first = 0,
                           std::size_t second = 1);

/// One relation per unordered pair (i < j), in (i, j) order.
std::vector<SwapRelation> swap_edges(std::span<const Solution> solutions);

struct SolutionAnalysis {
  std::vector<std::int64_t> core;
  std::map<std::int64_t, std::size_t> frequencies;
  std::vector<SwapRelation> edges;
  /// distance[i][j]: |only_in_i| for the pair, 0 on the diagonal.
  std::vector<std::vector<std::size_t>> distance;
  /// Smallest nonzero distance from each solution to any other (0 for a
  /// lone solution).
  std::vector<std::size_t> nearest;
  /// threshold t -> whether the graph joining solutions at distance <= t is
  /// connected, for t = 1 .. largest distance.
  std::map<std::size_t, bool> connectivity_at;
};

SolutionAnalysis analyze(std::span<const Solution> solutions);

}  // namespace ufmax
