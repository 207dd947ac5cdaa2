#pragma once

#include <string>
#include <string_view>

#include "besselmoments/bounded_real.hpp"
#include "besselmoments/precision.hpp"

namespace bm {

// iota = pi I0, kappa = K0(|x|);
// iota_plus = iota e^{-x} on x > 0 (zero elsewhere), iota_minus = iota e^{x} on x < 0;
// kappa_plus = kappa e^{-x}, kappa_minus = kappa e^{x} on the whole line.
enum class PVFunction { kappa_sq, iota_kappa_sgn, kappa_plus, kappa_minus, iota_plus, iota_minus };

std::string_view to_string(PVFunction f);
// InvalidSpecError for unknown names.
PVFunction parse_pv_function(std::string_view name);

struct PVQuery {
  PVFunction function;
  Real x;
};

struct PVOptions {
  // Points closer than this to the kappa singularity at 0 are rejected.
  double min_abs_x = 1e-3;
};

// f(x) for one of the functions above; x != 0.
BoundedReal pv_function(PVFunction f, const Real& x, const PrecisionContext& ctx);

// The known transform: H kappa^2 = iota kappa sgn, H(iota kappa sgn) = -kappa^2,
// H kappa_+ = iota_+, H kappa_- = -iota_-, H iota_+ = -kappa_+, H iota_- = kappa_-.
BoundedReal hilbert_image(PVFunction f, const Real& x, const PrecisionContext& ctx);

// P int f(xi) / (pi (x - xi)) dxi. The pole is handled by pairing x - r with x + r
// for r < min(|x|/2, 1); the remaining pieces are split at 0 and at the patch.
// DomainError (singular point) when |x| < min_abs_x.
BoundedReal hilbert_pv(const PVQuery& q, const PrecisionContext& ctx, const PVOptions& options = {});

}  // namespace bm
