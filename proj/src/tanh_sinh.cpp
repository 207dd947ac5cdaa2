#include "besselmoments/tanh_sinh.hpp"

#include <cmath>

#include "besselmoments/errors.hpp"

namespace bm {

Domain Domain::finite(Real lo, Real hi) {
  if (!(lo < hi)) throw DomainError("finite integration domain needs lo < hi");
  return Domain{Kind::finite, std::move(lo), std::move(hi)};
}

Domain Domain::to_infinity(Real lo) {
  Real hi = lo;
  return Domain{Kind::upper_infinite, std::move(lo), std::move(hi)};
}

Domain Domain::from_minus_infinity(Real hi) {
  Real lo = hi;
  return Domain{Kind::lower_infinite, std::move(lo), std::move(hi)};
}

DoubleExponentialRule::DoubleExponentialRule(Domain domain, const PrecisionContext& ctx)
    : domain_(std::move(domain)), ctx_(ctx) {
  const double pi = std::acos(-1.0);
  const double wl = ctx.working_digits() * std::log(10.0);
  if (domain_.kind == Domain::Kind::finite) {
    // Distance to either endpoint falls below 10^(-2 * working digits).
    s_max_ = std::ceil(std::asinh(2.0 * wl / pi));
    s_min_ = -s_max_;
  } else {
    // exp(pi/2 sinh s) spans [10^-(wd+10), 10^(2.3 wd)]: enough for integrands
    // decaying like x^{-3/2} to drop below working precision.
    s_min_ = -std::ceil(std::asinh(2.0 * (wl + 10.0 * std::log(10.0)) / pi));
    s_max_ = std::ceil(std::asinh(2.0 * 2.3 * wl / pi));
  }
  // Whole-number extents: the outermost nodes belong to level 0, so the
  // truncation points do not move under refinement.
}

QuadratureNode DoubleExponentialRule::make_node(const Real& s) const {
  const Real half_pi = ctx_.pi() / 2L;
  const Real p = half_pi * sinh(s);
  if (domain_.kind == Domain::Kind::finite) {
    const Real width = domain_.hi - domain_.lo;
    // q = e^{-2|p|}; distance to the nearer endpoint is width * q / (1 + q).
    const Real q = exp(-abs(p) * 2L);
    const Real one_plus_q = q + 1L;
    const Real offset = width * q / one_plus_q;
    Real x = s.sign() >= 0 ? domain_.hi - offset : domain_.lo + offset;
    if (s.is_zero()) x = (domain_.lo + domain_.hi) / 2L;
    Real weight = width * ctx_.pi() * cosh(s) * q / (one_plus_q * one_plus_q);
    return QuadratureNode{std::move(x), std::move(weight)};
  }
  const Real e = exp(p);
  Real weight = half_pi * cosh(s) * e;
  Real x = domain_.kind == Domain::Kind::upper_infinite ? domain_.lo + e : domain_.hi - e;
  return QuadratureNode{std::move(x), std::move(weight)};
}

const std::vector<QuadratureNode>& DoubleExponentialRule::level(int L) {
  while (static_cast<int>(levels_.size()) <= L) {
    const int current = static_cast<int>(levels_.size());
    const long scale = 1L << current;
    const long k_lo = static_cast<long>(std::ceil(s_min_ * scale));
    const long k_hi = static_cast<long>(std::floor(s_max_ * scale));
    std::vector<QuadratureNode> nodes;
    for (long k = k_lo; k <= k_hi; ++k) {
      if (current > 0 && k % 2 == 0) continue;
      const Real s = ldexp(Real(k, ctx_.bits()), -current);
      nodes.push_back(make_node(s));
    }
    levels_.push_back(std::move(nodes));
  }
  return levels_[L];
}

Real DoubleExponentialRule::step(int L) const { return ldexp(Real(1L, ctx_.bits()), -L); }

RefinableIntegral::RefinableIntegral(DoubleExponentialRule& rule, NodeIntegrand f, Real extra_err)
    : rule_(&rule),
      f_(std::move(f)),
      extra_err_(std::move(extra_err)),
      raw_sum_(rule.context().zero()),
      raw_err_(rule.context().zero()),
      raw_abs_(rule.context().zero()),
      value_(rule.context().zero()),
      previous_value_(rule.context().zero()) {}

void RefinableIntegral::refine() {
  const int L = level_ + 1;
  const auto& nodes = rule_->level(L);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const BoundedReal v = f_(L, i, nodes[i]);
    if (v.value.is_zero() && v.err.is_zero()) continue;
    const Real term = nodes[i].weight * v.value;
    raw_sum_ += term;
    raw_abs_ += abs(term);
    raw_err_ += nodes[i].weight * v.err;
  }
  nodes_used_ += static_cast<long>(nodes.size());
  previous_value_ = value_;
  value_ = rule_->step(L) * raw_sum_;
  level_ = L;
  history_.push_back(current_error());
}

Real RefinableIntegral::discretization_error() const {
  if (level_ <= 0) return abs(value_) + fixed_error();
  return abs(value_ - previous_value_);
}

Real RefinableIntegral::fixed_error() const {
  const Real h = rule_->step(std::max(level_, 0));
  return h * raw_err_ + h * raw_abs_ * rule_->context().ulp() * 8L + extra_err_;
}

Real RefinableIntegral::current_error() const { return discretization_error() + fixed_error(); }

BoundedReal RefinableIntegral::estimate() const { return BoundedReal(value_, current_error()); }

QuadratureResult integrate_parts(const std::vector<RefinableIntegral*>& parts, const PrecisionContext& ctx,
                                 const QuadratureOptions& options) {
  const int max_level = options.max_level.value_or(ctx.max_level());
  const int min_level = std::min(options.min_level, max_level);
  const Real relative = options.relative_target.value_or(ctx.target_epsilon());
  const Real floor = options.absolute_floor.value_or(ctx.zero());

  for (RefinableIntegral* p : parts)
    while (p->level() < min_level) p->refine();

  for (;;) {
    BoundedReal total = BoundedReal::exact(ctx.zero());
    Real fixed = ctx.zero();
    for (const RefinableIntegral* p : parts) {
      total += p->estimate();
      fixed += p->fixed_error();
    }
    const Real target = max(abs(total.value) * relative, floor);
    int level = 0;
    long nodes = 0;
    for (const RefinableIntegral* p : parts) {
      level = std::max(level, p->level());
      nodes += p->nodes_used();
    }
    if (total.err <= target) return QuadratureResult{std::move(total), level, nodes};

    RefinableIntegral* worst = nullptr;
    for (RefinableIntegral* p : parts)
      if (worst == nullptr || p->discretization_error() > worst->discretization_error()) worst = p;
    if (fixed > target || worst->level() >= max_level) {
      throw PrecisionError("quadrature did not reach the requested accuracy by level " + std::to_string(max_level),
                           total.value.to_string(ctx.target_digits()), total.err.to_string(3, MPFR_RNDU));
    }
    worst->refine();
  }
}

QuadratureResult tanh_sinh(const RealFunction& f, const Domain& domain, const PrecisionContext& ctx,
                           const QuadratureOptions& options) {
  DoubleExponentialRule rule(domain, ctx);
  RefinableIntegral integral(
      rule, [&f](int, std::size_t, const QuadratureNode& node) { return f(node.x); }, ctx.zero());
  return integrate_parts({&integral}, ctx, options);
}

}  // namespace bm
