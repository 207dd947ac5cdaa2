#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

namespace bm {

// Value-semantic MPFR number. Every instance carries its own precision;
// binary operations round to the larger of the two operand precisions.
class Real {
 public:
  explicit Real(mpfr_prec_t bits);
  Real(long v, mpfr_prec_t bits);
  Real(int v, mpfr_prec_t bits) : Real(static_cast<long>(v), bits) {}
  Real(double v, mpfr_prec_t bits);
  Real(const std::string& decimal, mpfr_prec_t bits);
  // Exact ratio num/den rounded to `bits`.
  static Real ratio(long num, long den, mpfr_prec_t bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long o);
  Real& operator/=(long o);

  Real operator-() const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Base-2 exponent e with 0.5 <= |x|/2^e < 1; very negative for zero.
  long exponent2() const;

  // Scientific notation with `digits` significant digits, e.g. "2.4674e+00".
  std::string to_string(int digits, mpfr_rnd_t rnd = MPFR_RNDN) const;

  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

 private:
  mpfr_t v_;
};

Real operator+(Real a, const Real& b);
Real operator-(Real a, const Real& b);
Real operator*(Real a, const Real& b);
Real operator/(Real a, const Real& b);
Real operator*(Real a, long b);
Real operator*(long a, Real b);
Real operator/(Real a, long b);
Real operator+(Real a, long b);
Real operator-(Real a, long b);

Real abs(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real sqrt(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real pow(const Real& x, long n);
Real pow(const Real& x, const Real& y);
Real ldexp(const Real& x, long e);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

Real const_pi(mpfr_prec_t bits);
Real const_euler(mpfr_prec_t bits);
Real const_log10(mpfr_prec_t bits);
// 10^e at the given precision.
Real pow10(long e, mpfr_prec_t bits);
// 2^(1-bits): unit roundoff bound for one correctly rounded operation.
Real unit_roundoff(mpfr_prec_t bits);

// Decimal digits to MPFR bits (rounded up, plus a small margin).
mpfr_prec_t digits_to_bits(int digits);

}  // namespace bm
