#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "besselmoments/bessel.hpp"
#include "besselmoments/exact.hpp"
#include "besselmoments/moment_spec.hpp"
#include "besselmoments/tanh_sinh.hpp"

namespace bm {

struct MomentResult {
  MomentSpec spec;
  BoundedReal value;
  long nodes_used;
  Real split_point;
  // Nodes beyond the cutoff are replaced by an analytic tail bound. For equal
  // I0/K0 powers this is the outermost node of the half-line rule.
  Real tail_cutoff;
  int level;
};

struct MomentOptions {
  // The domain is split here: tanh-sinh on (0, split], exp-sinh on [split, inf).
  double split_point = 1.0;
  int min_level = 3;
};

struct WeightedTerm {
  ExactRational coefficient;
  MomentSpec spec;
};

// Upper bound for int_T^inf pi^p I0^a K0^b t^c dt (T >= 1). For a < b from
// I0(t) <= e^t / (2 sqrt t) and K0(t) <= sqrt(pi / 2t) e^{-t}; for a = b from
// I0(t) K0(t) <= 1/t.
Real tail_bound(const MomentSpec& spec, const Real& cutoff, const PrecisionContext& ctx);
// Smallest convenient T for which tail_bound < 10^-(working digits + 5); a < b only.
Real tail_cutoff(const MomentSpec& spec, const PrecisionContext& ctx);

/// Evaluates many moments on one pair of node sets, caching e^{-t}I0 and e^{t}K0
/// at every node, so moments sharing a call reuse all Bessel evaluations.
/// Not thread-safe; create one engine per thread.
class MomentEngine {
 public:
  explicit MomentEngine(const PrecisionContext& ctx, MomentOptions options = {});
  ~MomentEngine();
  MomentEngine(const MomentEngine&) = delete;
  MomentEngine& operator=(const MomentEngine&) = delete;

  // Memoized per spec.
  const MomentResult& moment(const MomentSpec& spec);
  // sum coefficient * moment, term by term.
  BoundedReal weighted_sum(const std::vector<WeightedTerm>& terms);
  // The same combination integrated as one integrand; cancellation happens
  // node by node. The stopping rule is relative to int sum |coefficient * f|.
  BoundedReal fused_sum(const std::vector<WeightedTerm>& terms);

  const PrecisionContext& context() const { return ctx_; }

 private:
  struct Part;
  NodeIntegrand term_integrand(Part& part, const MomentSpec& spec, const std::optional<Real>& cutoff);
  std::pair<Real, Real> cutoff_and_tail(const MomentSpec& spec);
  const ScaledBessel& values_at(Part& part, int level, std::size_t index, const Real& x);

  PrecisionContext ctx_;
  MomentOptions options_;
  std::unique_ptr<Part> near_;
  std::unique_ptr<Part> far_;
  std::map<MomentSpec, MomentResult> memo_;
};

// pi^pi_power * IKM(a, b; c). DivergenceError for non-convergent specs,
// PrecisionError when the target cannot be met within max_level.
MomentResult moment(const MomentSpec& spec, const PrecisionContext& ctx, const MomentOptions& options = {});

// sum coefficient * moment(spec) with summed error bounds. An empty list is exactly 0.
BoundedReal weighted_moment_sum(const std::vector<WeightedTerm>& terms, const PrecisionContext& ctx,
                                const MomentOptions& options = {});

}  // namespace bm
