#ifndef HYLL_REAL_HPP
#define HYLL_REAL_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "hyll/rational.hpp"

namespace hyll {

// Binary precision that covers `digits` decimal digits plus guard bits.
mpfr_prec_t bits_for_digits(int digits);

// Arbitrary-precision real backed by one mpfr_t. Value semantics: copies
// clone precision and bits; arithmetic rounds to nearest-even at the wider
// of the operand precisions. All results are deterministic functions of
// the operands and their precisions.
class Real {
 public:
  Real() { mpfr_init2(v_, kMinPrec); mpfr_set_zero(v_, 1); }
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, clamp(prec)); mpfr_set_zero(v_, 1); }
  Real(long value, mpfr_prec_t prec) { mpfr_init2(v_, clamp(prec)); mpfr_set_si(v_, value, MPFR_RNDN); }
  Real(const Rational& q, mpfr_prec_t prec) { mpfr_init2(v_, clamp(prec)); mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
  Real(double value, mpfr_prec_t prec) { mpfr_init2(v_, clamp(prec)); mpfr_set_d(v_, value, MPFR_RNDN); }

  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, kMinPrec); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real from_string(const std::string& s, mpfr_prec_t prec);

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  // Rounds this value to `prec` bits (nearest-even).
  Real rounded_to(mpfr_prec_t prec) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_negative() const { return mpfr_signbit(v_) != 0 && !is_zero(); }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  Real operator-() const;
  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  // this += a*b without intermediate rounding beyond the final one.
  void add_product(const Real& a, const Real& b) { mpfr_fma(v_, a.v_, b.v_, v_, MPFR_RNDN); }
  void sub_product(const Real& a, const Real& b) { mpfr_fms(v_, a.v_, b.v_, v_, MPFR_RNDN); mpfr_neg(v_, v_, MPFR_RNDN); }

  friend Real operator+(const Real& a, const Real& b) { return binary(mpfr_add, a, b); }
  friend Real operator-(const Real& a, const Real& b) { return binary(mpfr_sub, a, b); }
  friend Real operator*(const Real& a, const Real& b) { return binary(mpfr_mul, a, b); }
  friend Real operator/(const Real& a, const Real& b) { return binary(mpfr_div, a, b); }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

  // Bit-identical: same precision, same significand, same sign/exponent.
  bool identical(const Real& o) const;

  friend Real abs(const Real& a);
  friend Real sqrt(const Real& a);

  // Decimal string that reads back to the exact same bits at the same
  // precision (round-to-nearest both ways).
  std::string roundtrip_string() const;
  // Plain fixed-point rendering with `frac_digits` digits after the point.
  std::string fixed_string(int frac_digits) const;
  // Scientific rendering with `sig_digits` significant digits.
  std::string scientific_string(int sig_digits) const;

  static constexpr mpfr_prec_t kMinPrec = 24;

 private:
  static mpfr_prec_t clamp(mpfr_prec_t p) { return p < kMinPrec ? kMinPrec : p; }
  using BinaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  static Real binary(BinaryFn fn, const Real& a, const Real& b);

  mpfr_t v_;
};

Real abs(const Real& a);
Real sqrt(const Real& a);

// 10^e at the given precision (e may be negative).
Real pow10(long e, mpfr_prec_t prec);

}  // namespace hyll

#endif  // HYLL_REAL_HPP
