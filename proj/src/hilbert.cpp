#include "besselmoments/hilbert.hpp"

#include <array>
#include <memory>

#include "besselmoments/bessel.hpp"
#include "besselmoments/errors.hpp"
#include "besselmoments/tanh_sinh.hpp"

namespace bm {

namespace {

constexpr std::array<std::pair<PVFunction, std::string_view>, 6> kNames{{
    {PVFunction::kappa_sq, "kappa_sq"},
    {PVFunction::iota_kappa_sgn, "iota_kappa_sgn"},
    {PVFunction::kappa_plus, "kappa_plus"},
    {PVFunction::kappa_minus, "kappa_minus"},
    {PVFunction::iota_plus, "iota_plus"},
    {PVFunction::iota_minus, "iota_minus"},
}};

BoundedReal times_pi(BoundedReal v, const PrecisionContext& ctx) {
  v *= ctx.pi();
  v.err += abs(v.value) * ctx.ulp();  // pi itself
  return v;
}

// Whether f vanishes identically on the given side of 0.
bool zero_on_side(PVFunction f, bool positive) {
  return (f == PVFunction::iota_plus && !positive) || (f == PVFunction::iota_minus && positive);
}

// |f(xi)| <= 2 / sqrt|xi| for |xi| >= 1 and every function here; with
// |x - xi| >= |xi|/2 the tail beyond D is at most 8 / (pi sqrt D).
Real far_tail_bound(const Real& D) { return Real(3L, D.precision()) / sqrt(D); }

}  // namespace

std::string_view to_string(PVFunction f) {
  for (const auto& [id, name] : kNames)
    if (id == f) return name;
  return "unknown";
}

PVFunction parse_pv_function(std::string_view name) {
  for (const auto& [id, n] : kNames)
    if (n == name) return id;
  throw InvalidSpecError("unknown Hilbert test function '" + std::string(name) +
                         "' (expected kappa_sq, iota_kappa_sgn, kappa_plus, kappa_minus, iota_plus or iota_minus)");
}

BoundedReal pv_function(PVFunction f, const Real& x, const PrecisionContext& ctx) {
  if (x.is_zero()) throw DomainError("Hilbert test functions are evaluated at x != 0 only");
  const bool positive = x.sign() > 0;
  if (zero_on_side(f, positive)) return BoundedReal::exact(ctx.zero());
  const Real t = abs(x);
  const Real minus_two_t = -t * 2L;
  switch (f) {
    case PVFunction::kappa_sq: {
      const BoundedReal k = k0_scaled(t, ctx);
      return detail::scale_by_exp(k * k, minus_two_t, ctx);
    }
    case PVFunction::iota_kappa_sgn: {
      BoundedReal v = times_pi(i0_scaled(t, ctx) * k0_scaled(t, ctx), ctx);
      if (!positive) v.value = -v.value;
      return v;
    }
    case PVFunction::kappa_plus:
      return positive ? detail::scale_by_exp(k0_scaled(t, ctx), minus_two_t, ctx) : k0_scaled(t, ctx);
    case PVFunction::kappa_minus:
      return positive ? k0_scaled(t, ctx) : detail::scale_by_exp(k0_scaled(t, ctx), minus_two_t, ctx);
    case PVFunction::iota_plus:
    case PVFunction::iota_minus:
      return times_pi(i0_scaled(t, ctx), ctx);
  }
  throw InvalidSpecError("unknown Hilbert test function");
}

BoundedReal hilbert_image(PVFunction f, const Real& x, const PrecisionContext& ctx) {
  auto negated = [](BoundedReal v) {
    v.value = -v.value;
    return v;
  };
  switch (f) {
    case PVFunction::kappa_sq:
      return pv_function(PVFunction::iota_kappa_sgn, x, ctx);
    case PVFunction::iota_kappa_sgn:
      return negated(pv_function(PVFunction::kappa_sq, x, ctx));
    case PVFunction::kappa_plus:
      return pv_function(PVFunction::iota_plus, x, ctx);
    case PVFunction::kappa_minus:
      return negated(pv_function(PVFunction::iota_minus, x, ctx));
    case PVFunction::iota_plus:
      return negated(pv_function(PVFunction::kappa_plus, x, ctx));
    case PVFunction::iota_minus:
      return pv_function(PVFunction::kappa_minus, x, ctx);
  }
  throw InvalidSpecError("unknown Hilbert test function");
}

BoundedReal hilbert_pv(const PVQuery& q, const PrecisionContext& ctx, const PVOptions& options) {
  const Real& x = q.x;
  if (!x.is_finite()) throw DomainError("Hilbert transform point must be finite");
  if (abs(x) < Real(options.min_abs_x, ctx.bits()))
    throw DomainError("singular point: |x| = " + abs(x).to_string(6) + " is too close to the logarithmic singularity at 0");

  const PVFunction f = q.function;
  const bool positive = x.sign() > 0;
  const Real delta = min(abs(x) / 2L, ctx.make(1L));
  const Real pi = ctx.pi();

  std::vector<std::unique_ptr<DoubleExponentialRule>> rules;
  std::vector<std::unique_ptr<RefinableIntegral>> parts;

  // f(xi) / (pi (x - xi)) away from the pole.
  const NodeIntegrand far = [&](int, std::size_t, const QuadratureNode& n) {
    BoundedReal v = pv_function(f, n.x, ctx);
    const Real scale = ctx.make(1L) / (pi * (x - n.x));
    v *= scale;
    v.err += abs(v.value) * ctx.ulp() * 3L;
    return v;
  };
  auto add_part = [&](Domain d, const NodeIntegrand& g, bool half_line) {
    rules.push_back(std::make_unique<DoubleExponentialRule>(std::move(d), ctx));
    Real tail = ctx.zero();
    if (half_line) {
      const auto& nodes = rules.back()->level(0);
      const Real D = max(abs(nodes.front().x), abs(nodes.back().x));
      if (D < abs(x) * 2L + 1L) throw PrecisionError("half-line rule too short for the tail bound");
      tail = far_tail_bound(D);
    }
    parts.push_back(std::make_unique<RefinableIntegral>(*rules.back(), g, tail));
  };

  // Symmetric patch: int_0^delta (f(x - r) - f(x + r)) / (pi r) dr.
  if (!zero_on_side(f, positive)) {
    const NodeIntegrand near = [&](int, std::size_t, const QuadratureNode& n) {
      BoundedReal v = pv_function(f, x - n.x, ctx) - pv_function(f, x + n.x, ctx);
      v *= ctx.make(1L) / (pi * n.x);
      v.err += abs(v.value) * ctx.ulp() * 3L;
      return v;
    };
    add_part(Domain::finite(ctx.zero(), delta), near, false);
  }

  if (positive) {
    if (!zero_on_side(f, false)) add_part(Domain::from_minus_infinity(ctx.zero()), far, true);
    if (!zero_on_side(f, true)) {
      add_part(Domain::finite(ctx.zero(), x - delta), far, false);
      add_part(Domain::to_infinity(x + delta), far, true);
    }
  } else {
    if (!zero_on_side(f, false)) {
      add_part(Domain::from_minus_infinity(x - delta), far, true);
      add_part(Domain::finite(x + delta, ctx.zero()), far, false);
    }
    if (!zero_on_side(f, true)) add_part(Domain::to_infinity(ctx.zero()), far, true);
  }

  std::vector<RefinableIntegral*> raw;
  for (auto& p : parts) raw.push_back(p.get());
  QuadratureOptions qo;
  // The transform may vanish (kappa_plus at x < 0), so the target is absolute
  // on an O(1) scale.
  qo.absolute_floor = ctx.target_epsilon();
  return integrate_parts(raw, ctx, qo).value;
}

}  // namespace bm
