#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>

#include "oracle.hpp"
#include "ufmax/decompose.hpp"
#include "ufmax/rational.hpp"

using ufmax::Rational;
using Pairs = std::vector<std::pair<std::int64_t, std::int64_t>>;

TEST_CASE("two-term splits") {
  CHECK(ufmax::two_term_splits(3) == Pairs{{4, 12}});
  CHECK(ufmax::two_term_splits(6) == Pairs{{7, 42}, {8, 24}, {9, 18}, {10, 15}});
  CHECK(ufmax::two_term_splits(1).empty());
  CHECK(ufmax::two_term_splits(12, 20).empty());
  CHECK(ufmax::two_term_splits(4) == Pairs{{5, 20}, {6, 12}});
}

TEST_CASE("two-term splits match a pair scan for n <= 50") {
  for (std::int64_t n = 1; n <= 50; ++n) {
    CAPTURE(n);
    auto splits = ufmax::two_term_splits(n, 10000);
    REQUIRE(splits == oracle::two_term_pairs(n, 10000));
    for (auto [x, y] : splits) REQUIRE(Rational::unit(x) + Rational::unit(y) == Rational::unit(n));
  }
}

TEST_CASE("the factor recipe is a strict subset of the full enumeration") {
  for (std::int64_t n = 2; n <= 200; ++n) {
    auto all = ufmax::two_term_splits(n);
    for (auto pair : ufmax::factor_recipe_splits(n)) {
      REQUIRE(std::find(all.begin(), all.end(), pair) != all.end());
    }
  }
  // 1/4 = 1/6 + 1/12 is found by the divisor enumeration only.
  auto recipe = ufmax::factor_recipe_splits(4);
  CHECK(std::find(recipe.begin(), recipe.end(), std::pair<std::int64_t, std::int64_t>{6, 12}) == recipe.end());
  CHECK(ufmax::factor_recipe_splits(3) == Pairs{{4, 12}});
}

TEST_CASE("common-multiple three-term split") {
  std::array<std::int64_t, 3> parts{3, 4, 6};
  CHECK(ufmax::lcm_three_term_split(12, parts) == std::array<std::int64_t, 3>{26, 39, 52});
  std::array<std::int64_t, 3> nine{1, 3, 9};
  CHECK(ufmax::lcm_three_term_split(9, nine) == std::array<std::int64_t, 3>{13, 39, 117});

  std::array<std::int64_t, 2> two{1, 2};
  CHECK_THROWS_AS(ufmax::lcm_three_term_split(2, two), std::invalid_argument);
  std::array<std::int64_t, 3> repeated{1, 3, 3};
  CHECK_THROWS_AS(ufmax::lcm_three_term_split(9, repeated), std::invalid_argument);
  std::array<std::int64_t, 3> not_divisor{1, 2, 5};
  CHECK_THROWS_AS(ufmax::lcm_three_term_split(12, not_divisor), std::invalid_argument);
}

TEST_CASE("k-term splits") {
  auto nine = ufmax::k_term_splits({9, 3, 99});
  CHECK(std::find(nine.begin(), nine.end(), std::vector<std::int64_t>{14, 35, 90}) != nine.end());
  auto twelve = ufmax::k_term_splits({12, 3, 99});
  CHECK(std::find(twelve.begin(), twelve.end(), std::vector<std::int64_t>{26, 39, 52}) != twelve.end());
  CHECK(ufmax::k_term_splits({12, 2, 20}).empty());
  CHECK_THROWS_AS(ufmax::k_term_splits({12, 3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(ufmax::k_term_splits({12, 1, 99}), std::invalid_argument);

  for (std::int64_t n = 2; n <= 15; ++n) {
    for (int terms = 2; terms <= 4; ++terms) {
      auto splits = ufmax::k_term_splits({n, terms, 60});
      REQUIRE(std::is_sorted(splits.begin(), splits.end()));
      for (const auto& s : splits) {
        REQUIRE(s.size() == static_cast<std::size_t>(terms));
        REQUIRE(std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) == s.end());
        REQUIRE(s.back() <= 60);
        REQUIRE(ufmax::reciprocal_sum(s) == Rational::unit(n));
      }
    }
  }
}

TEST_CASE("k-term with two terms equals the capped two-term list") {
  for (std::int64_t n = 1; n <= 40; ++n) {
    for (std::int64_t cap : {30, 99, 500}) {
      std::vector<std::vector<std::int64_t>> expected;
      for (auto [x, y] : ufmax::two_term_splits(n, cap)) expected.push_back({x, y});
      REQUIRE(ufmax::k_term_splits({n, 2, cap}) == expected);
    }
  }
}

TEST_CASE("k-term three-term splits match brute force over triples") {
  for (std::int64_t n : {2, 5, 9, 12}) {
    std::vector<std::vector<std::int64_t>> expected;
    const std::int64_t cap = 80;
    for (std::int64_t x = 1; x <= cap; ++x) {
      for (std::int64_t y = x + 1; y <= cap; ++y) {
        for (std::int64_t z = y + 1; z <= cap; ++z) {
          // 1/x + 1/y + 1/z == 1/n
          if (n * (y * z + x * z + x * y) == x * y * z) expected.push_back({x, y, z});
        }
      }
    }
    CAPTURE(n);
    CHECK(ufmax::k_term_splits({n, 3, cap}) == expected);
  }
}

TEST_CASE("every common-multiple triple within the cap is found by k-term search") {
  for (std::int64_t n = 2; n <= 30; ++n) {
    std::vector<std::int64_t> divs;
    for (std::int64_t d = 1; d <= n; ++d) {
      if (n % d == 0) divs.push_back(d);
    }
    auto splits = ufmax::k_term_splits({n, 3, 400});
    for (std::size_t i = 0; i < divs.size(); ++i) {
      for (std::size_t j = i + 1; j < divs.size(); ++j) {
        for (std::size_t k = j + 1; k < divs.size(); ++k) {
          std::array<std::int64_t, 3> parts{divs[i], divs[j], divs[k]};
          auto t = ufmax::lcm_three_term_split(n, parts);
          REQUIRE(ufmax::reciprocal_sum(t) == Rational::unit(n));
          if (t[2] > 400) continue;
          std::vector<std::int64_t> v(t.begin(), t.end());
          REQUIRE(std::find(splits.begin(), splits.end(), v) != splits.end());
        }
      }
    }
  }
  // (14, 35, 90) is not produced by any divisor triple of 9.
  std::vector<std::int64_t> d9{1, 3, 9};
  CHECK(ufmax::lcm_three_term_split(9, d9) != std::array<std::int64_t, 3>{14, 35, 90});
}
