#include "besselmoments/bounded_real.hpp"

#include <cstdlib>
#include <stdexcept>

namespace bm {

namespace {

// Adds the rounding error of the stored result: |value| * 2^(1-prec).
void add_rounding(BoundedReal& x) {
  x.err += abs(x.value) * unit_roundoff(x.value.precision());
}

}  // namespace

BoundedReal::BoundedReal(Real v, Real e) : value(std::move(v)), err(std::move(e)) {
  if (err.sign() < 0) throw std::invalid_argument("BoundedReal error estimate must be non-negative");
}

BoundedReal BoundedReal::exact(Real v) {
  Real zero(0L, v.precision());
  return BoundedReal(std::move(v), std::move(zero));
}

Real BoundedReal::relative_err() const {
  if (value.is_zero()) {
    Real r(value.precision());
    if (err.is_zero()) return r;
    mpfr_set_inf(r.get(), 1);
    return r;
  }
  return err / abs(value);
}

bool BoundedReal::overlaps(const BoundedReal& other) const {
  return abs(value - other.value) <= err + other.err;
}

BoundedReal& BoundedReal::operator+=(const BoundedReal& o) {
  value += o.value;
  err += o.err;
  add_rounding(*this);
  return *this;
}

BoundedReal& BoundedReal::operator-=(const BoundedReal& o) {
  value -= o.value;
  err += o.err;
  add_rounding(*this);
  return *this;
}

BoundedReal& BoundedReal::operator*=(const BoundedReal& o) {
  Real e = abs(value) * o.err + abs(o.value) * err + err * o.err;
  value *= o.value;
  err = std::move(e);
  add_rounding(*this);
  return *this;
}

BoundedReal& BoundedReal::operator*=(const Real& exact_factor) {
  value *= exact_factor;
  err *= abs(exact_factor);
  add_rounding(*this);
  return *this;
}

BoundedReal operator+(BoundedReal a, const BoundedReal& b) { return a += b; }
BoundedReal operator-(BoundedReal a, const BoundedReal& b) { return a -= b; }
BoundedReal operator*(BoundedReal a, const BoundedReal& b) { return a *= b; }
BoundedReal operator*(BoundedReal a, const Real& exact_factor) { return a *= exact_factor; }

BoundedReal operator/(const BoundedReal& a, const BoundedReal& b) {
  if (abs(b.value) <= b.err) throw std::domain_error("BoundedReal division by an interval containing zero");
  Real q = a.value / b.value;
  // |d(a/b)| <= (da + |a/b| db) / (|b| - db)
  Real e = (a.err + abs(q) * b.err) / (abs(b.value) - b.err);
  BoundedReal r(std::move(q), std::move(e));
  add_rounding(r);
  return r;
}

BoundedReal pow(const BoundedReal& x, long n) {
  if (n < 0) return BoundedReal::exact(Real(1L, x.precision())) / pow(x, -n);
  Real v = pow(x.value, n);
  if (n == 0) return BoundedReal::exact(std::move(v));
  // |d(x^n)| <= n |x|^(n-1) dx (1 + dx/|x|)^(n-1), kept first-order with a 2x cushion
  // once the relative error is no longer tiny.
  Real e = abs(pow(x.value, n - 1)) * x.err * n;
  if (!x.value.is_zero() && x.relative_err() * n > Real::ratio(1, 100, x.precision())) e *= 2L;
  BoundedReal r(std::move(v), std::move(e));
  r.err += abs(r.value) * unit_roundoff(r.precision()) * std::labs(n);
  return r;
}

std::string to_string(const BoundedReal& x, int digits) {
  return x.value.to_string(digits) + " +/- " + x.err.to_string(3, MPFR_RNDU);
}

}  // namespace bm
