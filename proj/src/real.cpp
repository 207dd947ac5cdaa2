#include "besselmoments/real.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace bm {

namespace {

// Widen the exponent range once so e^{±t} for the t-ranges the quadrature
// visits never hits MPFR's default limits.
struct ExponentRange {
  ExponentRange() {
    mpfr_set_emax(mpfr_get_emax_max());
    mpfr_set_emin(mpfr_get_emin_min());
  }
};

void ensure_exponent_range() {
  thread_local ExponentRange range;
  (void)range;
}

mpfr_prec_t wider(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

// Round `target` to at least `bits` without changing its value.
void widen(Real& target, mpfr_prec_t bits) {
  if (target.precision() < bits) mpfr_prec_round(target.get(), bits, MPFR_RNDN);
}

}  // namespace

Real::Real(mpfr_prec_t bits) {
  ensure_exponent_range();
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(long v, mpfr_prec_t bits) : Real(bits) { mpfr_set_si(v_, v, MPFR_RNDN); }

Real::Real(double v, mpfr_prec_t bits) : Real(bits) { mpfr_set_d(v_, v, MPFR_RNDN); }

Real::Real(const std::string& decimal, mpfr_prec_t bits) : Real(bits) {
  if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    // mpfr_set_str returns -1 only on a malformed string.
    char* end = nullptr;
    mpfr_strtofr(v_, decimal.c_str(), &end, 10, MPFR_RNDN);
    if (end == decimal.c_str() || *end != '\0') throw std::invalid_argument("not a decimal number: " + decimal);
  }
}

Real Real::ratio(long num, long den, mpfr_prec_t bits) {
  Real r(num, bits);
  mpfr_div_si(r.v_, r.v_, den, MPFR_RNDN);
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real& Real::operator+=(const Real& o) {
  widen(*this, o.precision());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  widen(*this, o.precision());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  widen(*this, o.precision());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  widen(*this, o.precision());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long o) {
  mpfr_div_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

long Real::exponent2() const {
  if (!mpfr_regular_p(v_)) return mpfr_zero_p(v_) ? std::numeric_limits<long>::min() / 2 : std::numeric_limits<long>::max() / 2;
  return mpfr_get_exp(v_);
}

std::string Real::to_string(int digits, mpfr_rnd_t rnd) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  char* raw = nullptr;
  const std::string fmt = "%." + std::to_string(std::max(0, digits - 1)) + "R" + (rnd == MPFR_RNDU ? "U" : rnd == MPFR_RNDD ? "D" : "N") + "e";
  if (mpfr_asprintf(&raw, fmt.c_str(), v_) < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::unique_ptr<char, decltype(&mpfr_free_str)> holder(raw, &mpfr_free_str);
  return std::string(raw);
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.v_, b);
  return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

Real operator+(Real a, const Real& b) { return a += b; }
Real operator-(Real a, const Real& b) { return a -= b; }
Real operator*(Real a, const Real& b) { return a *= b; }
Real operator/(Real a, const Real& b) { return a /= b; }
Real operator*(Real a, long b) { return a *= b; }
Real operator*(long a, Real b) { return b *= a; }
Real operator/(Real a, long b) { return a /= b; }

Real operator+(Real a, long b) {
  mpfr_add_si(a.get(), a.get(), b, MPFR_RNDN);
  return a;
}

Real operator-(Real a, long b) {
  mpfr_sub_si(a.get(), a.get(), b, MPFR_RNDN);
  return a;
}

#define BM_UNARY(name, fn)                   \
  Real name(const Real& x) {                 \
    Real r(x.precision());                   \
    fn(r.get(), x.get(), MPFR_RNDN);         \
    return r;                                \
  }

BM_UNARY(abs, mpfr_abs)
BM_UNARY(exp, mpfr_exp)
BM_UNARY(expm1, mpfr_expm1)
BM_UNARY(log, mpfr_log)
BM_UNARY(sqrt, mpfr_sqrt)
BM_UNARY(sinh, mpfr_sinh)
BM_UNARY(cosh, mpfr_cosh)

#undef BM_UNARY

Real pow(const Real& x, long n) {
  Real r(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r(wider(x, y));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r(x);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real const_pi(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real const_euler(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_euler(r.get(), MPFR_RNDN);
  return r;
}

Real const_log10(mpfr_prec_t bits) {
  Real r(10L, bits);
  mpfr_log(r.get(), r.get(), MPFR_RNDN);
  return r;
}

Real pow10(long e, mpfr_prec_t bits) {
  Real r(10L, bits);
  mpfr_pow_si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

Real unit_roundoff(mpfr_prec_t bits) {
  Real r(1L, bits);
  mpfr_mul_2si(r.get(), r.get(), 1 - static_cast<long>(bits), MPFR_RNDN);
  return r;
}

mpfr_prec_t digits_to_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

}  // namespace bm
