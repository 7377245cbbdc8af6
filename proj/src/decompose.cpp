#include "ufmax/decompose.hpp"

#include <algorithm>
#include <stdexcept>

#include "ufmax/numtheory.hpp"
#include "ufmax/rational.hpp"

namespace ufmax {

namespace {

constexpr std::int64_t kMaxSquarable = 3037000499;  // floor(sqrt(2^63 - 1))

void divisors_of_square(const std::vector<std::pair<std::int64_t, int>>& factors,
                        std::size_t idx, std::int64_t acc, std::int64_t below,
                        std::vector<std::int64_t>& out) {
  if (idx == factors.size()) {
    if (acc < below) out.push_back(acc);
    return;
  }
  auto [p, e] = factors[idx];
  std::int64_t mult = acc;
  for (int k = 0; k <= 2 * e && mult < below; ++k) {
    divisors_of_square(factors, idx + 1, mult, below, out);
    mult *= p;
  }
}

class KTermSearch {
 public:
  KTermSearch(std::int64_t cap, int terms) : cap_(cap) {
    // floor_sum_[r]: smallest possible sum of r distinct denominators <= cap.
    floor_sum_.resize(static_cast<std::size_t>(terms) + 1);
    for (int r = 1; r <= terms; ++r) {
      floor_sum_[r] = floor_sum_[r - 1] + Rational::unit(cap - r + 1);
    }
  }

  void run(const Rational& remaining, int r, std::int64_t prev) {
    if (r == 1) {
      if (remaining.num() == 1 && remaining.den() > prev && remaining.den() <= cap_) {
        current_.push_back(remaining.den().get_si());
        out_.push_back(current_);
        current_.pop_back();
      }
      return;
    }
    if (remaining < floor_sum_[r]) return;
    // 1/x < remaining, and r/x > remaining since later terms are smaller.
    BigInt lo_big = remaining.den() / remaining.num() + 1;
    BigInt hi_big = (BigInt(r) * remaining.den() - 1) / remaining.num();
    std::int64_t lo = std::max<std::int64_t>(prev + 1, fits_int64(lo_big) ? lo_big.get_si() : cap_ + 1);
    std::int64_t hi = std::min<std::int64_t>(cap_ - (r - 1), fits_int64(hi_big) ? hi_big.get_si() : cap_);
    for (std::int64_t x = lo; x <= hi; ++x) {
      current_.push_back(x);
      run(remaining - Rational::unit(x), r - 1, x);
      current_.pop_back();
    }
  }

  std::vector<std::vector<std::int64_t>> take() { return std::move(out_); }

 private:
  std::int64_t cap_;
  std::vector<Rational> floor_sum_{Rational()};
  std::vector<std::int64_t> current_;
  std::vector<std::vector<std::int64_t>> out_;
};

}  // namespace

std::vector<std::pair<std::int64_t, std::int64_t>> two_term_splits(std::int64_t n, std::int64_t cap) {
  if (n < 1) throw std::invalid_argument("two_term_splits needs n >= 1");
  if (n > kMaxSquarable) throw std::overflow_error("n^2 exceeds 64 bits");
  std::vector<std::int64_t> divs;
  divisors_of_square(factorize(n), 0, 1, n, divs);
  std::sort(divs.begin(), divs.end());
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  // d < n keeps x < y; d == n would give x == y == 2n.
  for (auto d : divs) {
    std::int64_t x = n + d;
    std::int64_t y = n + n * n / d;
    if (cap > 0 && y > cap) continue;
    out.emplace_back(x, y);
  }
  return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> factor_recipe_splits(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factor_recipe_splits needs n >= 1");
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t a = 1; a * a < n; ++a) {
    if (n % a != 0) continue;
    std::int64_t b = n / a;
    out.emplace_back(a * (a + b), b * (a + b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::array<std::int64_t, 3> lcm_three_term_split(std::int64_t n, std::span<const std::int64_t> parts) {
  if (parts.size() != 3) throw std::invalid_argument("common-multiple split needs exactly three parts");
  if (n < 1) throw std::invalid_argument("n must be positive");
  for (std::size_t i = 0; i < 3; ++i) {
    if (parts[i] < 1 || n % parts[i] != 0) {
      throw std::invalid_argument("every part must be a positive divisor of n");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (parts[i] == parts[j]) throw std::invalid_argument("parts must be distinct");
    }
  }
  const std::int64_t scaled = n * (parts[0] + parts[1] + parts[2]);
  std::array<std::int64_t, 3> out{scaled / parts[0], scaled / parts[1], scaled / parts[2]};
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::int64_t>> k_term_splits(const SplitRequest& req) {
  if (req.n < 1) throw std::invalid_argument("k_term_splits needs n >= 1");
  if (req.terms < 2) throw std::invalid_argument("k_term_splits needs terms >= 2");
  if (req.cap <= 0) throw std::invalid_argument("k_term_splits needs a positive cap");
  if (req.cap < req.terms) return {};
  KTermSearch search(req.cap, req.terms);
  search.run(Rational::unit(req.n), req.terms, 0);
  return search.take();
}

}  // namespace ufmax
