// Exhaustive search for sets of distinct unit fractions with denominators
// in [lo, hi] summing exactly to a target.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ufmax/rational.hpp"

namespace ufmax {

/// Strictly increasing denominators.
using Solution = std::vector<std::int64_t>;

enum class SearchMode {
  kDirect,      // choose the k members
  kComplement,  // choose the |candidates| - k non-members
};

const char* to_string(SearchMode mode);
SearchMode parse_search_mode(std::string_view text);

struct SearchSpec {
  std::int64_t lo = 2;
  std::int64_t hi = 99;
  int min_terms = 1;
  int max_terms = 0;  // 0: up to the harmonic bound
  /// Search k from the top of the range downward and stop at the first k
  /// with solutions.
  bool maximize = false;
  Rational target{1};
  SearchMode mode = SearchMode::kDirect;
  /// Denominators to search over; the sieve's kept set when absent.
  std::optional<std::vector<std::int64_t>> candidates;
  unsigned threads = 1;
  bool residue_prune = false;
  /// Skip the 64-bit scaled path even when it is safe.
  bool force_bigint = false;

  static SearchSpec exactly(std::int64_t lo, std::int64_t hi, int k, Rational target = Rational(1)) {
    SearchSpec s;
    s.lo = lo;
    s.hi = hi;
    s.min_terms = s.max_terms = k;
    s.target = std::move(target);
    return s;
  }
};

struct PruneCounts {
  std::uint64_t nodes = 0;
  std::uint64_t too_few_left = 0;   // fewer candidates left than terms needed
  std::uint64_t cannot_reach = 0;   // the largest reciprocals left fall short
  std::uint64_t overshoots = 0;     // the smallest reciprocals left already exceed
  std::uint64_t not_exact = 0;      // a term larger than the remainder, or a nonzero remainder with no terms left
  std::uint64_t residue = 0;        // p-adic residue unreachable by the suffix

  PruneCounts& operator+=(const PruneCounts& o);
};

struct SearchStats {
  PruneCounts prunes;
  double wall_seconds = 0.0;
  unsigned threads = 1;
  bool bigint = false;
  std::uint64_t work_items = 0;
};

struct SearchResult {
  SearchSpec spec;
  /// Denominators actually searched (ascending).
  std::vector<std::int64_t> candidates;
  /// Upper bound on the term count from the harmonic window (0 if no
  /// term fits under the target).
  std::int64_t term_bound = 0;
  /// Term counts searched, in search order.
  std::vector<int> searched_terms;
  /// Largest k with solutions when spec.maximize is set.
  std::optional<int> best_terms;
  /// Why the search was skipped, when a bound already rules it out.
  std::optional<std::string> infeasible;
  /// Lexicographically sorted, no duplicates.
  std::vector<Solution> solutions;
  SearchStats stats;
};

SearchResult solve(const SearchSpec& spec);

/// Exact recheck of a candidate solution with rational arithmetic.
struct Verdict {
  bool ok = false;
  std::string failure;            // first violated condition, empty when ok
  std::vector<Rational> running;  // partial sums after each term
};

Verdict verify_solution(std::span<const std::int64_t> dens, const Rational& target,
                        std::optional<std::pair<std::int64_t, std::int64_t>> range = std::nullopt);

/// Number of solutions containing each denominator of [spec.lo, spec.hi],
/// ascending by denominator. Zero count marks a denominator unused.
std::vector<std::pair<std::int64_t, std::size_t>> usability_report(const SearchResult& result);

}  // namespace ufmax
