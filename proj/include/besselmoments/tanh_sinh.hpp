#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "besselmoments/bounded_real.hpp"
#include "besselmoments/precision.hpp"

namespace bm {

/// Integration interval: finite (lo, hi), half-line (lo, +inf) or (-inf, hi).
struct Domain {
  enum class Kind { finite, upper_infinite, lower_infinite };
  Kind kind;
  Real lo;
  Real hi;

  static Domain finite(Real lo, Real hi);
  static Domain to_infinity(Real lo);
  static Domain from_minus_infinity(Real hi);
};

struct QuadratureNode {
  Real x;
  Real weight;  // dx/ds at the node; the step h is applied by the integrator
};

/// Double-exponential abscissae for one domain, organised by refinement level.
///
/// Level 0 holds the nodes s = k (integer k); level L > 0 adds the odd multiples
/// of 2^-L. Finite intervals use x = tanh(pi/2 sinh s) scaled to (lo, hi);
/// half-lines use x = lo + exp(pi/2 sinh s). Node positions near an endpoint are
/// computed from the distance to that endpoint, so log-singular integrands see
/// exact small arguments. Levels are built lazily; an instance is not thread-safe.
class DoubleExponentialRule {
 public:
  DoubleExponentialRule(Domain domain, const PrecisionContext& ctx);

  const Domain& domain() const { return domain_; }
  const std::vector<QuadratureNode>& level(int L);
  Real step(int L) const;
  const PrecisionContext& context() const { return ctx_; }

 private:
  QuadratureNode make_node(const Real& s) const;

  Domain domain_;
  PrecisionContext ctx_;
  double s_min_;
  double s_max_;
  std::vector<std::vector<QuadratureNode>> levels_;
};

// Integrand for a refinable integral: called with (level, index within level, node).
using NodeIntegrand = std::function<BoundedReal(int, std::size_t, const QuadratureNode&)>;

/// One integral under successive refinement of its rule.
///
/// After level L the estimate is S_L = h_L * sum(w f) over all nodes so far. The
/// reported error is |S_L - S_{L-1}| plus the accumulated integrand error and a
/// rounding term, plus any fixed extra bound (for example a discarded tail).
class RefinableIntegral {
 public:
  RefinableIntegral(DoubleExponentialRule& rule, NodeIntegrand f, Real extra_err);

  void refine();
  int level() const { return level_; }
  long nodes_used() const { return nodes_used_; }
  BoundedReal estimate() const;
  // |S_L - S_{L-1}|: the part of the error that refinement reduces.
  Real discretization_error() const;
  // Integrand error, rounding and the extra bound: unaffected by refinement.
  Real fixed_error() const;
  // Error estimate after each completed level (index = level).
  const std::vector<Real>& error_history() const { return history_; }

 private:
  Real current_error() const;

  DoubleExponentialRule* rule_;
  NodeIntegrand f_;
  Real extra_err_;
  int level_ = -1;
  long nodes_used_ = 0;
  Real raw_sum_;
  Real raw_err_;
  Real raw_abs_;
  Real value_;
  Real previous_value_;
  std::vector<Real> history_;
};

struct QuadratureOptions {
  int min_level = 3;
  // Defaults to the context's max_level.
  std::optional<int> max_level;
  // Stop once err <= max(relative_target * |value|, absolute_floor).
  // Unset relative target means the context's target epsilon.
  std::optional<Real> relative_target;
  std::optional<Real> absolute_floor;
};

struct QuadratureResult {
  BoundedReal value;
  int level;
  long nodes_used;
};

// Refines the parts (always the one with the largest error first) until the sum
// of their estimates meets the target. Throws PrecisionError with the best
// estimate when a part would need to exceed max_level.
QuadratureResult integrate_parts(const std::vector<RefinableIntegral*>& parts, const PrecisionContext& ctx,
                                 const QuadratureOptions& options = {});

using RealFunction = std::function<BoundedReal(const Real&)>;

// Integral of f over `domain` by double-exponential quadrature.
QuadratureResult tanh_sinh(const RealFunction& f, const Domain& domain, const PrecisionContext& ctx,
                           const QuadratureOptions& options = {});

}  // namespace bm
