#include "ufmax/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace ufmax {

namespace {

BigInt from_int64(std::int64_t v) {
  // mpz_class has no int64 constructor on every platform; go through
  // long when it is wide enough.
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return BigInt(static_cast<long>(v));
}

bool parse_integer(std::string_view text, BigInt& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational::Rational(std::int64_t value) : num_(from_int64(value)), den_(1) {}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : num_(from_int64(num)), den_(from_int64(den)) {
  normalize();
}

void Rational::normalize() {
  if (den_ == 0) throw std::domain_error("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  BigInt num;
  BigInt den = 1;
  if (!parse_integer(text.substr(0, slash), num)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  if (slash != std::string_view::npos) {
    auto den_text = text.substr(slash + 1);
    if (den_text.empty() || den_text[0] == '-' || den_text[0] == '+' ||
        !parse_integer(den_text, den)) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    if (den == 0) {
      throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
  }
  return Rational(std::move(num), std::move(den));
}

std::string Rational::str() const { return num_.get_str() + "/" + den_.get_str(); }

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("division by zero rational");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

Rational Rational::operator-() const { return Rational(-num_, den_, Reduced{}); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational reciprocal_sum(std::span<const std::int64_t> dens) {
  Rational sum;
  for (auto d : dens) sum += Rational::unit(d);
  return sum;
}

BigInt lcm_of_set(std::span<const std::int64_t> dens) {
  if (dens.empty()) throw std::invalid_argument("lcm of an empty set");
  BigInt l = 1;
  for (auto d : dens) {
    if (d <= 0) throw std::invalid_argument("lcm of a non-positive integer");
    BigInt v = from_int64(d);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_mpz_t());
  }
  return l;
}

bool fits_int64(const BigInt& v) {
  static const BigInt lo = from_int64(std::numeric_limits<std::int64_t>::min());
  static const BigInt hi = from_int64(std::numeric_limits<std::int64_t>::max());
  return v >= lo && v <= hi;
}

std::int64_t to_int64(const BigInt& v) {
  if (!fits_int64(v)) throw std::overflow_error("integer exceeds 64 bits: " + v.get_str());
  return static_cast<std::int64_t>(v.get_si());
}

ScaledInt to_scaled(const Rational& r, const BigInt& scale) {
  if (scale <= 0) throw std::invalid_argument("scale must be positive");
  if (!mpz_divisible_p(scale.get_mpz_t(), r.den().get_mpz_t())) {
    throw std::invalid_argument("scale " + scale.get_str() + " is not a multiple of " +
                                r.den().get_str());
  }
  BigInt value = r.num() * (scale / r.den());
  return ScaledInt{to_int64(value), to_int64(scale)};
}

Rational to_rational(const ScaledInt& s) { return Rational(s.value, s.scale); }

bool scaled_sum_is_safe(std::size_t count, const BigInt& scale) {
  BigInt limit = 1;
  limit <<= 62;
  return BigInt(static_cast<unsigned long>(count)) * scale < limit;
}

}  // namespace ufmax
