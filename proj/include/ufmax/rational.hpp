// Exact rational arithmetic and the common-denominator integer form used
// by the search hot path.
#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ufmax {

using BigInt = mpz_class;

/// Exact fraction, always stored in lowest terms with a positive denominator.
/// Zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(BigInt num, BigInt den);
  Rational(std::int64_t num, std::int64_t den);

  static Rational unit(std::int64_t den) { return Rational(1, den); }

  /// Accepts "P/Q" or "P" with an optional leading '-'. Throws
  /// std::invalid_argument on anything else, including a zero denominator.
  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return sgn(num_); }

  /// "p/q" in lowest terms; integers keep the "/1".
  std::string str() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  struct Reduced {};
  Rational(BigInt num, BigInt den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Sum of 1/d over the given denominators.
Rational reciprocal_sum(std::span<const std::int64_t> dens);

/// Least common multiple of a nonempty list of positive integers.
BigInt lcm_of_set(std::span<const std::int64_t> dens);

/// The rational value / scale, with scale a common multiple of every
/// denominator in play. Both parts fit in 64 bits.
struct ScaledInt {
  std::int64_t value = 0;
  std::int64_t scale = 1;
};

ScaledInt to_scaled(const Rational& r, const BigInt& scale);
Rational to_rational(const ScaledInt& s);

/// True when `count` terms of magnitude at most `scale` can be summed in a
/// signed 64-bit integer with headroom, i.e. count * scale < 2^62.
bool scaled_sum_is_safe(std::size_t count, const BigInt& scale);

bool fits_int64(const BigInt& v);
std::int64_t to_int64(const BigInt& v);

}  // namespace ufmax
