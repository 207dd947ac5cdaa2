#pragma once

#include <string>

#include "besselmoments/real.hpp"

namespace bm {

/// An arbitrary-precision value with a non-negative absolute error estimate.
///
/// Arithmetic propagates errors to first order and adds one rounding of the
/// result; the estimates are not formally verified interval bounds.
struct BoundedReal {
  Real value;
  Real err;

  BoundedReal(Real v, Real e);
  // Exact value (zero error).
  static BoundedReal exact(Real v);

  mpfr_prec_t precision() const { return value.precision(); }
  // err / |value|; infinity for a zero value with nonzero error.
  Real relative_err() const;
  // True when |value - other| <= err + other_err.
  bool overlaps(const BoundedReal& other) const;

  BoundedReal& operator+=(const BoundedReal& o);
  BoundedReal& operator-=(const BoundedReal& o);
  BoundedReal& operator*=(const BoundedReal& o);
  BoundedReal& operator*=(const Real& exact_factor);
};

BoundedReal operator+(BoundedReal a, const BoundedReal& b);
BoundedReal operator-(BoundedReal a, const BoundedReal& b);
BoundedReal operator*(BoundedReal a, const BoundedReal& b);
BoundedReal operator*(BoundedReal a, const Real& exact_factor);
BoundedReal operator/(const BoundedReal& a, const BoundedReal& b);
BoundedReal pow(const BoundedReal& x, long n);

std::string to_string(const BoundedReal& x, int digits);

}  // namespace bm
