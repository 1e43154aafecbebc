#pragma once

#include <mpfr.h>

#include <compare>
#include <memory>

#include "bessum/rational.hpp"

namespace bessum {

/// Arbitrary-precision binary floating value (MPFR), round-to-nearest-even.
///
/// Each value owns its precision. Binary operations produce a value at the
/// larger of the operand precisions; every primitive operation is correctly
/// rounded, so results are reproducible bit-for-bit on any platform.
class Real {
 public:
  explicit Real(mpfr_prec_t bits);
  Real(long value, mpfr_prec_t bits);
  Real(const Rational& value, mpfr_prec_t bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  /// Same value rounded to a different precision.
  Real with_precision(mpfr_prec_t bits) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  bool is_integer() const { return mpfr_integer_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Truncating conversion; caller guarantees the value is an integer in range.
  long to_long() const { return mpfr_get_si(value_, MPFR_RNDZ); }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator+=(long rhs);
  Real& operator-=(long rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);
  Real& operator*=(const Rational& rhs);
  Real operator-() const;

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b);

 private:
  mpfr_t value_;
};

Real operator+(Real a, const Real& b);
Real operator-(Real a, const Real& b);
Real operator*(Real a, const Real& b);
Real operator/(Real a, const Real& b);
Real operator+(Real a, long b);
Real operator-(Real a, long b);
Real operator*(Real a, long b);
Real operator/(Real a, long b);
Real operator*(Real a, const Rational& b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real floor(const Real& x);
Real pow(const Real& base, const Real& exponent);
Real pow(const Real& base, long exponent);
/// x * 2^e, exact.
Real ldexp(const Real& x, long e);
/// log10|x| as a double (for digit counting only).
double log10_abs(const Real& x);

/// Working precision and formatting rules shared by every numeric operation.
///
/// Immutable once built; pi and sqrt(pi) are computed once at construction.
/// Safe to share between threads.
class PrecisionContext {
 public:
  static constexpr int kDefaultWorkingDigits = 64;
  static constexpr int kDefaultDisplayDigits = 34;
  static constexpr int kMinGuardDigits = 10;
  /// Extra decimal digits below working precision used by series stopping rules.
  static constexpr int kSeriesGuardDigits = 5;

  explicit PrecisionContext(int working_digits = kDefaultWorkingDigits,
                            int display_digits = kDefaultDisplayDigits);

  int working_digits() const { return working_digits_; }
  int display_digits() const { return display_digits_; }
  mpfr_prec_t bits() const { return bits_; }

  Real zero() const { return Real(bits_); }
  Real make(long value) const { return Real(value, bits_); }
  Real make(const Rational& value) const { return Real(value, bits_); }

  const Real& pi() const { return *pi_; }
  const Real& sqrt_pi() const { return *sqrt_pi_; }
  /// 10^-(working_digits + series guard), the per-term negligibility threshold.
  const Real& series_tolerance() const { return *series_tol_; }

  /// Context with working digits doubled (display digits unchanged).
  PrecisionContext doubled() const;

 private:
  int working_digits_;
  int display_digits_;
  mpfr_prec_t bits_;
  std::shared_ptr<const Real> pi_;
  std::shared_ptr<const Real> sqrt_pi_;
  std::shared_ptr<const Real> series_tol_;
};

/// Bits needed to carry the given number of decimal digits.
mpfr_prec_t digits_to_bits(int digits);

/// Neumaier-compensated running sum, accumulated in the order added.
class CompensatedSum {
 public:
  explicit CompensatedSum(mpfr_prec_t bits) : sum_(bits), carry_(bits) {}
  void add(const Real& term);
  Real value() const { return sum_ + carry_; }

 private:
  Real sum_;
  Real carry_;
};

}  // namespace bessum
