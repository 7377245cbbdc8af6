#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <deque>

#include "ufmax/bounds.hpp"

using ufmax::Rational;

TEST_CASE("window for hi = 99") {
  auto rep = ufmax::harmonic_window(99);
  CHECK(rep.window_start == 38);
  CHECK(rep.max_terms == 62);
  CHECK(rep.window_sum < Rational(1));
  REQUIRE(rep.extended_sum.has_value());
  CHECK(*rep.extended_sum > Rational(1));
  CHECK(*rep.extended_sum - rep.window_sum == Rational::unit(37));
}

TEST_CASE("window for hi = 6") {
  // 1/2 + ... + 1/6 = 29/20 > 1, 1/3 + ... + 1/6 = 19/20
  auto rep = ufmax::harmonic_window(6);
  CHECK(rep.window_start == 3);
  CHECK(rep.max_terms == 4);
  CHECK(rep.window_sum == Rational(19, 20));
  CHECK(*rep.extended_sum == Rational(29, 20));
}

TEST_CASE("window errors and large targets") {
  CHECK_THROWS_AS(ufmax::harmonic_window(1), std::invalid_argument);
  CHECK_THROWS_AS(ufmax::harmonic_window(10, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(ufmax::harmonic_window(10, Rational(1, 11)), std::invalid_argument);
  auto one_term = ufmax::harmonic_window(10, Rational(1, 10));
  CHECK(one_term.max_terms == 1);
  auto everything = ufmax::harmonic_window(5, Rational(10));
  CHECK(everything.window_start == 1);
  CHECK(everything.max_terms == 5);
  CHECK_FALSE(everything.extended_sum.has_value());
}

TEST_CASE("window invariant for every hi up to 10000") {
  // Sliding window maintained incrementally, independent of harmonic_window.
  Rational sum;
  std::int64_t start = 1;
  for (std::int64_t hi = 1; hi <= 10000; ++hi) {
    sum += Rational::unit(hi);
    while (sum > Rational(1)) {
      sum -= Rational::unit(start);
      ++start;
    }
    if (hi < 2) continue;
    // Invariant: window_sum <= 1 < window_sum + 1/(start - 1).
    REQUIRE(sum <= Rational(1));
    if (start > 1) REQUIRE(sum + Rational::unit(start - 1) > Rational(1));
    if (hi <= 300 || hi % 997 == 0 || hi == 10000) {
      auto rep = ufmax::harmonic_window(hi);
      REQUIRE(rep.window_start == start);
      REQUIRE(rep.window_sum == sum);
      REQUIRE(rep.max_terms == hi - start + 1);
    }
  }
}

TEST_CASE("log bracket for harmonic numbers") {
  auto two = ufmax::harmonic_log_check(2);
  CHECK(two.harmonic == Rational(3, 2));
  CHECK(two.holds());
  auto ten = ufmax::harmonic_log_check(10);
  CHECK(ten.harmonic == Rational(7381, 2520));
  CHECK(ten.holds());
  CHECK(ufmax::harmonic_log_check(99).holds());
  for (std::int64_t n = 2; n <= 400; ++n) REQUIRE(ufmax::harmonic_log_check(n).holds());
  CHECK_THROWS_AS(ufmax::harmonic_log_check(1), std::invalid_argument);
}
