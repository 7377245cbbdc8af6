#include "ufmax/bounds.hpp"

#include <stdexcept>

#include <mpfr.h>

namespace ufmax {

BoundReport harmonic_window(std::int64_t hi, const Rational& target) {
  if (hi < 2) throw std::invalid_argument("harmonic_window needs hi >= 2");
  if (target.sign() <= 0) throw std::invalid_argument("harmonic_window needs a positive target");
  if (Rational::unit(hi) > target) {
    throw std::invalid_argument("target " + target.str() + " is below 1/" + std::to_string(hi) +
                                "; the window is empty");
  }
  BoundReport report;
  report.hi = hi;
  report.target = target;
  Rational sum;
  std::int64_t start = hi + 1;
  while (start > 1) {
    Rational next = sum + Rational::unit(start - 1);
    if (next > target) {
      report.extended_sum = std::move(next);
      break;
    }
    sum = std::move(next);
    --start;
  }
  report.window_start = start;
  report.max_terms = hi - start + 1;
  report.window_sum = std::move(sum);
  return report;
}

namespace {

// RAII for one mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

constexpr mpfr_prec_t kPrecision = 256;

void set_rational(Mpfr& out, const Rational& r, mpfr_rnd_t rnd) {
  mpq_t q;
  mpq_init(q);
  mpz_set(mpq_numref(q), r.num().get_mpz_t());
  mpz_set(mpq_denref(q), r.den().get_mpz_t());
  mpfr_set_q(out.get(), q, rnd);
  mpq_clear(q);
}

}  // namespace

HarmonicLogCheck harmonic_log_check(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("harmonic_log_check needs n >= 2");
  HarmonicLogCheck check;
  check.n = n;
  for (std::int64_t i = 1; i <= n; ++i) check.harmonic += Rational::unit(i);

  Mpfr h_down(kPrecision), h_up(kPrecision);
  set_rational(h_down, check.harmonic, MPFR_RNDD);
  set_rational(h_up, check.harmonic, MPFR_RNDU);

  // lower: log n + 1/n, rounded up.  upper: log n + 1, rounded down.
  Mpfr lower(kPrecision), upper(kPrecision), inv(kPrecision);
  mpfr_set_si(lower.get(), static_cast<long>(n), MPFR_RNDN);
  mpfr_log(lower.get(), lower.get(), MPFR_RNDU);
  set_rational(inv, Rational::unit(n), MPFR_RNDU);
  mpfr_add(lower.get(), lower.get(), inv.get(), MPFR_RNDU);

  mpfr_set_si(upper.get(), static_cast<long>(n), MPFR_RNDN);
  mpfr_log(upper.get(), upper.get(), MPFR_RNDD);
  mpfr_add_ui(upper.get(), upper.get(), 1, MPFR_RNDD);

  check.lower_holds = mpfr_less_p(lower.get(), h_down.get()) != 0;
  check.upper_holds = mpfr_less_p(h_up.get(), upper.get()) != 0;
  return check;
}

}  // namespace ufmax
