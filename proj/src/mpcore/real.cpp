#include "bessum/real.hpp"

#include <algorithm>
#include <cmath>

namespace bessum {

namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

mpfr_prec_t wider(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

// In-place binary op that first widens the destination if needed.
template <typename Op>
Real& apply(Real& self, const Real& rhs, Op op) {
  if (rhs.precision() > self.precision()) {
    mpfr_prec_round(self.get(), rhs.precision(), kRound);
  }
  op(self.get(), self.get(), rhs.get(), kRound);
  return self;
}

}  // namespace

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, kRound);
}

Real::Real(const Rational& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), kRound);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, kRound);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, kRound);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::with_precision(mpfr_prec_t bits) const {
  Real out(bits);
  mpfr_set(out.value_, value_, kRound);
  return out;
}

Real& Real::operator+=(const Real& rhs) { return apply(*this, rhs, mpfr_add); }
Real& Real::operator-=(const Real& rhs) { return apply(*this, rhs, mpfr_sub); }
Real& Real::operator*=(const Real& rhs) { return apply(*this, rhs, mpfr_mul); }
Real& Real::operator/=(const Real& rhs) { return apply(*this, rhs, mpfr_div); }

Real& Real::operator+=(long rhs) {
  mpfr_add_si(value_, value_, rhs, kRound);
  return *this;
}
Real& Real::operator-=(long rhs) {
  mpfr_sub_si(value_, value_, rhs, kRound);
  return *this;
}
Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, kRound);
  return *this;
}
Real& Real::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, kRound);
  return *this;
}
Real& Real::operator*=(const Rational& rhs) {
  mpfr_mul_q(value_, value_, rhs.get_mpq_t(), kRound);
  return *this;
}

Real Real::operator-() const {
  Real out(*this);
  mpfr_neg(out.value_, out.value_, kRound);
  return out;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real operator+(Real a, const Real& b) { return a += b; }
Real operator-(Real a, const Real& b) { return a -= b; }
Real operator*(Real a, const Real& b) { return a *= b; }
Real operator/(Real a, const Real& b) { return a /= b; }
Real operator+(Real a, long b) { return a += b; }
Real operator-(Real a, long b) { return a -= b; }
Real operator*(Real a, long b) { return a *= b; }
Real operator/(Real a, long b) { return a /= b; }
Real operator*(Real a, const Rational& b) { return a *= b; }

Real abs(const Real& x) {
  Real out(x.precision());
  mpfr_abs(out.get(), x.get(), kRound);
  return out;
}

Real sqrt(const Real& x) {
  Real out(x.precision());
  mpfr_sqrt(out.get(), x.get(), kRound);
  return out;
}

Real exp(const Real& x) {
  Real out(x.precision());
  mpfr_exp(out.get(), x.get(), kRound);
  return out;
}

Real log(const Real& x) {
  Real out(x.precision());
  mpfr_log(out.get(), x.get(), kRound);
  return out;
}

Real sin(const Real& x) {
  Real out(x.precision());
  mpfr_sin(out.get(), x.get(), kRound);
  return out;
}

Real floor(const Real& x) {
  Real out(x.precision());
  mpfr_floor(out.get(), x.get());
  return out;
}

Real pow(const Real& base, const Real& exponent) {
  Real out(wider(base, exponent));
  mpfr_pow(out.get(), base.get(), exponent.get(), kRound);
  return out;
}

Real pow(const Real& base, long exponent) {
  Real out(base.precision());
  mpfr_pow_si(out.get(), base.get(), exponent, kRound);
  return out;
}

Real ldexp(const Real& x, long e) {
  Real out(x.precision());
  mpfr_mul_2si(out.get(), x.get(), e, kRound);
  return out;
}

double log10_abs(const Real& x) {
  if (x.is_zero()) return -HUGE_VAL;
  long exp2 = 0;
  const double mant = mpfr_get_d_2exp(&exp2, x.get(), kRound);
  return std::log10(std::fabs(mant)) + static_cast<double>(exp2) * std::log10(2.0);
}

mpfr_prec_t digits_to_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 4;
}

PrecisionContext::PrecisionContext(int working_digits, int display_digits)
    : working_digits_(working_digits), display_digits_(display_digits) {
  if (display_digits < 1 || working_digits < display_digits + kMinGuardDigits) {
    throw std::invalid_argument("working digits must be at least display digits + 10");
  }
  bits_ = digits_to_bits(working_digits);

  Real pi(bits_);
  mpfr_const_pi(pi.get(), kRound);
  pi_ = std::make_shared<const Real>(pi);
  sqrt_pi_ = std::make_shared<const Real>(sqrt(pi));

  Real tol(10, bits_);
  mpfr_pow_si(tol.get(), tol.get(), -(working_digits + kSeriesGuardDigits), kRound);
  series_tol_ = std::make_shared<const Real>(tol);
}

PrecisionContext PrecisionContext::doubled() const {
  return PrecisionContext(2 * working_digits_, display_digits_);
}

void CompensatedSum::add(const Real& term) {
  Real t = sum_ + term;
  if (abs(sum_) >= abs(term)) {
    carry_ += (sum_ - t) + term;
  } else {
    carry_ += (term - t) + sum_;
  }
  sum_ = std::move(t);
}

}  // namespace bessum
