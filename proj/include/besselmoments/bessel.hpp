#pragma once

#include "besselmoments/bounded_real.hpp"
#include "besselmoments/moment_spec.hpp"
#include "besselmoments/precision.hpp"

namespace bm {

struct BesselPoint {
  Real t;
  BoundedReal i0;
  BoundedReal k0;
};

// Exponentially scaled pair e^{-t} I0(t), e^{t} K0(t). These stay O(t^{-1/2})
// for every t, so the quadrature never has to represent e^{t}.
struct ScaledBessel {
  BoundedReal i0e;
  BoundedReal k0e;
};

// I0(t) for t >= 0, with err <= 10^-target_digits * value.
BoundedReal i0(const Real& t, const PrecisionContext& ctx);
// K0(t) for t > 0, with err <= 10^-target_digits * value. DomainError for t <= 0.
BoundedReal k0(const Real& t, const PrecisionContext& ctx);
BesselPoint bessel_point(const Real& t, const PrecisionContext& ctx);

BoundedReal i0_scaled(const Real& t, const PrecisionContext& ctx);
BoundedReal k0_scaled(const Real& t, const PrecisionContext& ctx);
ScaledBessel scaled_bessel(const Real& t, const PrecisionContext& ctx);

// Individual evaluation routes, exposed so they can be checked against each other.
namespace detail {

// sum_k (t^2/4)^k / (k!)^2 with ratio-test tail bound.
BoundedReal i0_ascending_series(const Real& t, const PrecisionContext& ctx);
// -(ln(t/2) + gamma) I0(t) + sum_{k>=1} H_k (t^2/4)^k / (k!)^2. Valid for any t > 0,
// but cancellation grows like e^{2t}; the bound accounts for it.
BoundedReal k0_log_series(const Real& t, const PrecisionContext& ctx);
// e^{t} K0(t) = int_0^inf exp(-2 t sinh^2(u/2)) du by the trapezoid rule.
BoundedReal k0_scaled_schlafli(const Real& t, const PrecisionContext& ctx);
// Large-t expansions of the scaled functions. Return false when the expansion
// cannot reach working precision at this t.
bool i0_scaled_asymptotic(const Real& t, const PrecisionContext& ctx, BoundedReal& out);
bool k0_scaled_asymptotic(const Real& t, const PrecisionContext& ctx, BoundedReal& out);
// x * e^{s}, where s carries one rounding that the exponential amplifies by |s|.
BoundedReal scale_by_exp(const BoundedReal& x, const Real& s, const PrecisionContext& ctx);
// t beyond which the asymptotic expansions are used.
double asymptotic_threshold(const PrecisionContext& ctx);

}  // namespace detail

// pi^p I0(t)^a K0(t)^b t^c with propagated error. OverflowError if the result
// leaves the representable range.
BoundedReal integrand(const MomentSpec& spec, const Real& t, const PrecisionContext& ctx);
// Same, from precomputed scaled values at t.
BoundedReal integrand(const MomentSpec& spec, const Real& t, const ScaledBessel& values, const Real& pi_factor,
                      const PrecisionContext& ctx);

}  // namespace bm
