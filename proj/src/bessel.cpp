#include "besselmoments/bessel.hpp"

#include <cmath>
#include <cstdlib>

#include "besselmoments/errors.hpp"

namespace bm {

namespace detail {

BoundedReal scale_by_exp(const BoundedReal& x, const Real& s, const PrecisionContext& ctx) {
  Real factor = exp(s);
  if (!factor.is_finite()) throw OverflowError("exponential scale factor out of range at t = " + s.to_string(10));
  BoundedReal r = x;
  r *= factor;
  r.err += abs(r.value) * ctx.ulp() * (abs(s) + 3L);
  return r;
}

double asymptotic_threshold(const PrecisionContext& ctx) {
  return ctx.working_digits() * std::log(10.0) / 2.0 + 10.0;
}

BoundedReal i0_ascending_series(const Real& t, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  const Real q = t * t / 4L;
  const double qd = q.to_double();
  const Real stop = ctx.working_epsilon() / 100L;

  Real term(1L, bits);
  Real sum(1L, bits);
  Real tail(0L, bits);
  long k = 0;
  for (;;) {
    ++k;
    term *= q;
    term /= k * k;
    sum += term;
    const double r = qd / static_cast<double>((k + 1) * (k + 1));
    if (r < 0.5) {
      // Ratios decrease from here on, so the tail is dominated by a geometric series.
      Real bound = term * Real(r / (1.0 - r), bits);
      if (bound <= sum * stop) {
        tail = std::move(bound);
        break;
      }
    }
  }
  Real err = sum * ctx.ulp() * (4 * k + 4) + tail;
  return BoundedReal(std::move(sum), std::move(err));
}

BoundedReal k0_log_series(const Real& t, const PrecisionContext& ctx) {
  if (t.sign() <= 0) throw DomainError("K0 is defined for t > 0 only");
  const mpfr_prec_t bits = ctx.bits();
  const Real q = t * t / 4L;
  const double qd = q.to_double();
  const Real log_term = log(t / 2L) + ctx.euler();
  const Real stop = ctx.working_epsilon() / 100L;

  Real term(1L, bits);
  Real harmonic(0L, bits);
  Real sum_i(1L, bits);
  Real sum_h(0L, bits);
  Real tail(0L, bits);
  long k = 0;
  for (;;) {
    ++k;
    term *= q;
    term /= k * k;
    harmonic += Real::ratio(1, k, bits);
    sum_i += term;
    sum_h += harmonic * term;
    const double r = 2.0 * qd / static_cast<double>((k + 1) * (k + 1));
    if (r < 0.5) {
      const Real geom(r / (1.0 - r), bits);
      Real bound = (harmonic + abs(log_term)) * term * geom;
      const Real current = abs(sum_h - log_term * sum_i);
      if (bound <= current * stop) {
        tail = std::move(bound);
        break;
      }
    }
  }
  Real value = sum_h - log_term * sum_i;
  // Rounding in both sums plus in ln(t/2) + gamma, measured against the
  // magnitude of the cancelling parts.
  const Real magnitude = abs(log_term) * sum_i + sum_h;
  Real err = magnitude * ctx.ulp() * (6 * k + 12) + tail;
  return BoundedReal(std::move(value), std::move(err));
}

BoundedReal k0_scaled_schlafli(const Real& t, const PrecisionContext& ctx) {
  if (t.sign() <= 0) throw DomainError("K0 is defined for t > 0 only");
  const mpfr_prec_t bits = ctx.bits();
  const double td = t.to_double();
  const double wl = ctx.working_digits() * std::log(10.0);
  const double pi = std::acos(-1.0);

  // Trapezoid error in the strip |Im u| < pi/3 is at most
  // 8 e^{t/2} / (e^{2 pi^2 / (3h)} - 1) relative to the integral.
  const double hd = 2.0 * pi * pi / (3.0 * (wl + td / 2.0 + std::log(8.0) + 2.0));
  // Truncate where t (cosh u - 1) exceeds the working range.
  const double umax = std::acosh(1.0 + (wl + 10.0) / td);
  const long n = static_cast<long>(std::ceil(umax / hd));

  const Real h(hd, bits);
  const Real step = exp(h / 2L);
  const Real step_inv = Real(1L, bits) / step;
  Real up(1L, bits);
  Real down(1L, bits);
  Real sum = Real::ratio(1, 2, bits);
  Real rounding(0L, bits);
  Real last_arg(0L, bits);
  for (long k = 1; k <= n; ++k) {
    up *= step;
    down *= step_inv;
    const Real s = (up - down) / 2L;
    Real arg = t * s * s * 2L;
    const Real f = exp(-arg);
    sum += f;
    rounding += f * (arg * (k + 6) + 2L);
    last_arg = std::move(arg);
  }
  Real value = h * sum;

  const Real two_pi_sq_over = Real(2.0 * pi * pi / (3.0 * hd), bits);
  const Real discretization = value * exp(t / 2L - two_pi_sq_over) * 16L;
  const Real u_end = h * n;
  const Real truncation = exp(-last_arg) / (t * sinh(u_end));
  Real err = discretization + truncation + (h * rounding + value * (n + 4)) * ctx.ulp();
  return BoundedReal(std::move(value), std::move(err));
}

namespace {

// Shared driver for e^{-t} I0(t) ~ (2 pi t)^{-1/2} sum c_k t^{-k} and
// e^{t} K0(t) ~ (pi / 2t)^{1/2} sum (-1)^k c_k t^{-k}, c_k = ((2k-1)!!)^2 / (k! 8^k).
bool scaled_asymptotic(const Real& t, const PrecisionContext& ctx, bool alternating, BoundedReal& out) {
  const mpfr_prec_t bits = ctx.bits();
  const Real stop = ctx.working_epsilon() / 100L;
  Real term(1L, bits);
  Real sum(1L, bits);
  long k = 0;
  Real next(bits);
  for (;;) {
    next = term * ((2 * k + 1) * (2 * k + 1));
    next /= 8 * (k + 1);
    next /= t;
    if (next >= term) return false;  // past the smallest term before converging
    ++k;
    if (next <= stop) break;
    term = next;
    if (alternating && (k % 2 == 1))
      sum -= term;
    else
      sum += term;
    if (k > 100000) return false;
  }
  // `next` is the first omitted term. For K0 the remainder is bounded by it;
  // I0 additionally misses an e^{-2t} contribution.
  Real err = alternating ? next : next * 2L + exp(-t * 2L);
  err += sum * ctx.ulp() * (4 * k + 8);
  const Real pi = ctx.pi();
  Real prefactor = alternating ? sqrt(pi / (t * 2L)) : Real(1L, bits) / sqrt(pi * t * 2L);
  Real value = sum * prefactor;
  err = err * prefactor + abs(value) * ctx.ulp() * 4L;
  out = BoundedReal(std::move(value), std::move(err));
  return true;
}

}  // namespace

bool i0_scaled_asymptotic(const Real& t, const PrecisionContext& ctx, BoundedReal& out) {
  return scaled_asymptotic(t, ctx, false, out);
}

bool k0_scaled_asymptotic(const Real& t, const PrecisionContext& ctx, BoundedReal& out) {
  return scaled_asymptotic(t, ctx, true, out);
}

}  // namespace detail

namespace {

constexpr long kLogSeriesLimit = 2;

void check_target(const BoundedReal& x, const PrecisionContext& ctx, const char* what) {
  if (x.err > abs(x.value) * ctx.target_epsilon())
    throw PrecisionError(std::string(what) + ": requested accuracy not reached at working precision",
                         x.value.to_string(ctx.target_digits()), x.err.to_string(3, MPFR_RNDU));
}

bool use_asymptotic(const Real& t, const PrecisionContext& ctx) {
  return t.to_double() > detail::asymptotic_threshold(ctx);
}

}  // namespace

BoundedReal i0_scaled(const Real& t, const PrecisionContext& ctx) {
  const Real at = abs(t);
  if (use_asymptotic(at, ctx)) {
    BoundedReal out = BoundedReal::exact(ctx.zero());
    if (detail::i0_scaled_asymptotic(at, ctx, out)) return out;
  }
  return detail::scale_by_exp(detail::i0_ascending_series(at, ctx), -at, ctx);
}

BoundedReal k0_scaled(const Real& t, const PrecisionContext& ctx) {
  if (t.sign() <= 0) throw DomainError("K0 is defined for t > 0 only");
  if (t <= kLogSeriesLimit) return detail::scale_by_exp(detail::k0_log_series(t, ctx), t, ctx);
  if (use_asymptotic(t, ctx)) {
    BoundedReal out = BoundedReal::exact(ctx.zero());
    if (detail::k0_scaled_asymptotic(t, ctx, out)) return out;
  }
  return detail::k0_scaled_schlafli(t, ctx);
}

ScaledBessel scaled_bessel(const Real& t, const PrecisionContext& ctx) {
  return ScaledBessel{i0_scaled(t, ctx), k0_scaled(t, ctx)};
}

BoundedReal i0(const Real& t, const PrecisionContext& ctx) {
  if (t.sign() < 0) throw DomainError("i0 expects t >= 0");
  if (t.is_zero()) return BoundedReal::exact(Real(1L, ctx.bits()));
  BoundedReal r = use_asymptotic(t, ctx) ? detail::scale_by_exp(i0_scaled(t, ctx), t, ctx)
                                         : detail::i0_ascending_series(t, ctx);
  check_target(r, ctx, "i0");
  return r;
}

BoundedReal k0(const Real& t, const PrecisionContext& ctx) {
  if (t.sign() <= 0) throw DomainError("K0 diverges at t = 0 and is not defined for t < 0");
  BoundedReal r = t <= kLogSeriesLimit ? detail::k0_log_series(t, ctx)
                                       : detail::scale_by_exp(k0_scaled(t, ctx), -t, ctx);
  check_target(r, ctx, "k0");
  return r;
}

BesselPoint bessel_point(const Real& t, const PrecisionContext& ctx) {
  return BesselPoint{t, i0(t, ctx), k0(t, ctx)};
}

BoundedReal integrand(const MomentSpec& spec, const Real& t, const ScaledBessel& values, const Real& pi_factor,
                      const PrecisionContext& ctx) {
  BoundedReal r = BoundedReal::exact(pi_factor);
  r.err = abs(pi_factor) * ctx.ulp() * (std::abs(spec.pi_power) + 1);
  if (spec.a > 0) r *= pow(values.i0e, spec.a);
  if (spec.b > 0) r *= pow(values.k0e, spec.b);
  if (spec.a != spec.b) {
    const Real arg = t * static_cast<long>(spec.a - spec.b);
    BoundedReal scaled = detail::scale_by_exp(r, arg, ctx);
    r = std::move(scaled);
  }
  if (spec.c > 0) {
    r *= pow(t, static_cast<long>(spec.c));
    r.err += abs(r.value) * ctx.ulp() * spec.c;
  }
  if (!r.value.is_finite() || !r.err.is_finite())
    throw OverflowError("integrand " + spec.to_string() + " overflows at t = " + t.to_string(12));
  return r;
}

BoundedReal integrand(const MomentSpec& spec, const Real& t, const PrecisionContext& ctx) {
  if (t.sign() <= 0) throw DomainError("moment integrand is evaluated at t > 0 only");
  const ScaledBessel values{spec.a > 0 ? i0_scaled(t, ctx) : BoundedReal::exact(Real(1L, ctx.bits())),
                            spec.b > 0 ? k0_scaled(t, ctx) : BoundedReal::exact(Real(1L, ctx.bits()))};
  return integrand(spec, t, values, pow(ctx.pi(), static_cast<long>(spec.pi_power)), ctx);
}

}  // namespace bm
