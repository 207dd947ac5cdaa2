#include "besselmoments/moment.hpp"

#include <cmath>

#include "besselmoments/errors.hpp"

namespace bm {

namespace {

// log of the prefactor pi^p 2^-a (pi/2)^{b/2} in the tail envelope.
double log_envelope_prefactor(const MomentSpec& s) {
  const double pi = std::acos(-1.0);
  return s.pi_power * std::log(pi) - s.a * std::log(2.0) + 0.5 * s.b * std::log(pi / 2.0);
}

}  // namespace

Real tail_bound(const MomentSpec& spec, const Real& cutoff, const PrecisionContext& ctx) {
  if (spec.a == spec.b) {
    // I0 K0 <= 1/t for t >= 1, so the integrand is below pi^p t^{c-a}.
    const long e = spec.a - spec.c - 1;
    if (e <= 0 || cutoff < 1L) throw DomainError("tail bound needs T >= 1 and c <= a - 2");
    return pow(ctx.pi(), static_cast<long>(spec.pi_power)) / (pow(cutoff, e) * e);
  }
  if (spec.a > spec.b) throw DomainError("tail bound applies to convergent moments only");
  const long d = spec.b - spec.a;
  // Integrand <= C t^q e^{-d t} with q = c - (a + b)/2; for T with d > q/T,
  // int_T^inf t^q e^{-dt} dt <= T^q e^{-dT} / (d - q/T).
  const Real q = Real(static_cast<long>(2 * spec.c - spec.a - spec.b), ctx.bits()) / 2L;
  const Real denom = Real(d, ctx.bits()) - q / cutoff;
  if (denom.sign() <= 0 || cutoff < 1L) throw DomainError("tail bound needs T >= 1 and T > q / (b - a)");
  const Real pi = ctx.pi();
  Real prefactor = pow(pi, static_cast<long>(spec.pi_power)) * ldexp(Real(1L, ctx.bits()), -spec.a) *
                   pow(sqrt(pi / 2L), static_cast<long>(spec.b));
  return prefactor * pow(cutoff, q) * exp(-cutoff * d) / denom;
}

Real tail_cutoff(const MomentSpec& spec, const PrecisionContext& ctx) {
  const double d = spec.b - spec.a;
  const double q = spec.c - 0.5 * (spec.a + spec.b);
  const double target = (ctx.working_digits() + 5) * std::log(10.0) + log_envelope_prefactor(spec);
  double T = std::max({2.0, target / d, 2.0 * q / d + 1.0});
  for (int i = 0; i < 60; ++i) {
    const double next = (target + q * std::log(T) - std::log(d - q / T)) / d;
    T = std::max({next, 2.0, 2.0 * q / d + 1.0});
  }
  // Round up to a whole number so the cutoff has an exact, readable value.
  return Real(static_cast<long>(std::ceil(T)) + 1, ctx.bits());
}

struct MomentEngine::Part {
  Part(Domain domain, const PrecisionContext& ctx) : rule(std::move(domain), ctx) {}
  DoubleExponentialRule rule;
  // Lazily evaluated scaled Bessel values, per level and node index.
  std::vector<std::vector<std::optional<ScaledBessel>>> values;
};

MomentEngine::MomentEngine(const PrecisionContext& ctx, MomentOptions options)
    : ctx_(ctx), options_(options) {
  if (!(options_.split_point > 0.0)) throw DomainError("split point must be positive");
  const Real split(options_.split_point, ctx_.bits());
  near_ = std::make_unique<Part>(Domain::finite(ctx_.zero(), split), ctx_);
  far_ = std::make_unique<Part>(Domain::to_infinity(split), ctx_);
}

MomentEngine::~MomentEngine() = default;

const ScaledBessel& MomentEngine::values_at(Part& part, int level, std::size_t index, const Real& x) {
  if (static_cast<int>(part.values.size()) <= level) part.values.resize(level + 1);
  auto& row = part.values[level];
  if (row.size() <= index) row.resize(part.rule.level(level).size());
  auto& slot = row[index];
  if (!slot) slot = scaled_bessel(x, ctx_);
  return *slot;
}

NodeIntegrand MomentEngine::term_integrand(Part& part, const MomentSpec& spec, const std::optional<Real>& cutoff) {
  const Real pi_factor = pow(ctx_.pi(), static_cast<long>(spec.pi_power));
  return [this, &part, spec, cutoff, pi_factor](int level, std::size_t index, const QuadratureNode& node) {
    if (cutoff && node.x > *cutoff) return BoundedReal::exact(ctx_.zero());
    const ScaledBessel& v = values_at(part, level, index, node.x);
    return integrand(spec, node.x, v, pi_factor, ctx_);
  };
}

std::pair<Real, Real> MomentEngine::cutoff_and_tail(const MomentSpec& spec) {
  if (spec.a == spec.b) {
    // Algebraic decay: the rule itself truncates at its outermost node.
    Real last = far_->rule.level(0).back().x;
    Real tail = tail_bound(spec, last, ctx_);
    return {std::move(last), std::move(tail)};
  }
  Real cutoff = max(tail_cutoff(spec, ctx_), Real(options_.split_point + 1.0, ctx_.bits()));
  Real tail = tail_bound(spec, cutoff, ctx_);
  return {std::move(cutoff), std::move(tail)};
}

const MomentResult& MomentEngine::moment(const MomentSpec& spec) {
  if (auto it = memo_.find(spec); it != memo_.end()) return it->second;
  spec.validate();

  const auto [cutoff, tail] = cutoff_and_tail(spec);

  RefinableIntegral near(near_->rule, term_integrand(*near_, spec, std::nullopt), ctx_.zero());
  RefinableIntegral far(far_->rule, term_integrand(*far_, spec, cutoff), tail);
  QuadratureOptions q;
  q.min_level = options_.min_level;
  QuadratureResult r = integrate_parts({&near, &far}, ctx_, q);

  MomentResult result{spec, std::move(r.value), r.nodes_used, Real(options_.split_point, ctx_.bits()), cutoff,
                      r.level};
  return memo_.emplace(spec, std::move(result)).first->second;
}

BoundedReal MomentEngine::weighted_sum(const std::vector<WeightedTerm>& terms) {
  BoundedReal total = BoundedReal::exact(ctx_.zero());
  for (const WeightedTerm& t : terms) {
    if (t.coefficient == 0) continue;
    BoundedReal m = moment(t.spec).value;
    m *= to_real(t.coefficient, ctx_.bits());
    m.err += abs(m.value) * ctx_.ulp();  // coefficient rounding
    total += m;
  }
  return total;
}

BoundedReal MomentEngine::fused_sum(const std::vector<WeightedTerm>& terms) {
  struct Term {
    Real coefficient;
    MomentSpec spec;
    Real cutoff;
    Real pi_factor;
  };
  std::vector<Term> active;
  Real tail = ctx_.zero();
  for (const WeightedTerm& t : terms) {
    if (t.coefficient == 0) continue;
    t.spec.validate();
    auto [cutoff, term_tail] = cutoff_and_tail(t.spec);
    Term term{to_real(t.coefficient, ctx_.bits()), t.spec, std::move(cutoff),
              pow(ctx_.pi(), static_cast<long>(t.spec.pi_power))};
    tail += abs(term.coefficient) * term_tail;
    active.push_back(std::move(term));
  }
  if (active.empty()) return BoundedReal::exact(ctx_.zero());

  auto make = [this, &active](Part& part, bool absolute) -> NodeIntegrand {
    return [this, &active, &part, absolute](int level, std::size_t index, const QuadratureNode& node) {
      BoundedReal sum = BoundedReal::exact(ctx_.zero());
      const ScaledBessel* v = nullptr;
      for (const Term& t : active) {
        if (node.x > t.cutoff) continue;
        if (v == nullptr) v = &values_at(part, level, index, node.x);
        BoundedReal f = integrand(t.spec, node.x, *v, t.pi_factor, ctx_);
        f *= absolute ? abs(t.coefficient) : t.coefficient;
        sum += f;
      }
      return sum;
    };
  };

  // Scale of the combination: int sum |c_j f_j| at a fixed coarse level.
  RefinableIntegral near_mag(near_->rule, make(*near_, true), ctx_.zero());
  RefinableIntegral far_mag(far_->rule, make(*far_, true), ctx_.zero());
  for (int L = 0; L <= options_.min_level; ++L) {
    near_mag.refine();
    far_mag.refine();
  }
  const Real magnitude = near_mag.estimate().value + far_mag.estimate().value;

  RefinableIntegral near(near_->rule, make(*near_, false), ctx_.zero());
  RefinableIntegral far(far_->rule, make(*far_, false), tail);
  QuadratureOptions q;
  q.min_level = options_.min_level;
  q.relative_target = ctx_.zero();
  q.absolute_floor = magnitude * ctx_.target_epsilon();
  return integrate_parts({&near, &far}, ctx_, q).value;
}

MomentResult moment(const MomentSpec& spec, const PrecisionContext& ctx, const MomentOptions& options) {
  spec.validate();
  MomentEngine engine(ctx, options);
  return engine.moment(spec);
}

BoundedReal weighted_moment_sum(const std::vector<WeightedTerm>& terms, const PrecisionContext& ctx,
                                const MomentOptions& options) {
  if (terms.empty()) return BoundedReal::exact(ctx.zero());
  for (const WeightedTerm& t : terms) t.spec.validate();
  MomentEngine engine(ctx, options);
  return engine.weighted_sum(terms);
}

}  // namespace bm
