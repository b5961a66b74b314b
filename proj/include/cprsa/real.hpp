#pragma once

#include <mpfr.h>

#include <string>

#include "cprsa/bigint.hpp"

namespace cprsa {

/// Owning wrapper around an MPFR float with a fixed precision. Binary
/// operators return a value at the larger operand precision, rounded to
/// nearest.
class Real {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 128;

  explicit Real(mpfr_prec_t precision = kDefaultPrecision);
  Real(double value, mpfr_prec_t precision = kDefaultPrecision);
  Real(const BigInt& value, mpfr_prec_t precision = kDefaultPrecision);
  Real(const Rational& value, mpfr_prec_t precision = kDefaultPrecision);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  BigInt ceil() const;
  BigInt floor() const;
  std::string to_string(int digits = 12) const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  Real operator-() const;

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_); }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.value_, b.value_); }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.value_, b.value_); }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.value_, b.value_); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_); }

 private:
  mpfr_t value_;
};

Real sqrt(const Real& x);
Real abs(const Real& x);
Real log2(const Real& x);
Real exp2(const Real& x);

}  // namespace cprsa
