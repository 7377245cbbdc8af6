// Harmonic-sum bounds on how many distinct unit fractions with
// denominators <= hi can add up to a target.
#pragma once

#include <cstdint>
#include <optional>

#include "ufmax/rational.hpp"

namespace ufmax {

struct BoundReport {
  std::int64_t hi = 0;
  Rational target{1};
  /// Smallest n with 1/n + ... + 1/hi <= target.
  std::int64_t window_start = 0;
  /// hi - window_start + 1; no representation has more terms.
  std::int64_t max_terms = 0;
  Rational window_sum;
  /// window_sum + 1/(window_start - 1), which exceeds the target; absent
  /// when the window already reaches 1.
  std::optional<Rational> extended_sum;
};

/// Throws std::invalid_argument when hi < 2, target <= 0, or 1/hi > target.
BoundReport harmonic_window(std::int64_t hi, const Rational& target = Rational(1));

/// log n + 1/n < H_n < log n + 1, certified with outward-rounded
/// multiprecision brackets of log n against the exact H_n.
struct HarmonicLogCheck {
  std::int64_t n = 0;
  Rational harmonic;
  bool lower_holds = false;
  bool upper_holds = false;
  bool holds() const { return lower_holds && upper_holds; }
};

HarmonicLogCheck harmonic_log_check(std::int64_t n);

}  // namespace ufmax
