#pragma once

#include <optional>
#include <string>
#include <vector>

#include "besselmoments/moment.hpp"

namespace bm {

enum class SumRuleFamily { Z, Y };

struct SumRuleSpec {
  SumRuleFamily family;
  int n;
  int k;

  // InvalidSpecError unless n >= 2k >= 2 (Z) or n - 1 >= 2k >= 2 (Y).
  void validate() const;
  // "Z_{2n,n-2k}" / "Y_{2n,n-2k}" with the indices filled in.
  std::string name() const;
};

struct SumRuleTerm {
  ExactInteger coeff;
  MomentSpec spec;
  std::optional<MomentResult> result;  // unset in fused mode
};

struct SumRuleReport {
  SumRuleSpec spec;
  BoundedReal value;
  bool pass;  // |value| <= err
  std::vector<SumRuleTerm> terms;
};

// Z: ((-1)^m C(n,2m), IKM(n-2m, n+2m; n-2k) weighted by pi^{n-2m}), m = 0..n/2.
// Y: ((-1)^m C(n,2m-1), IKM(n-2m+1, n+2m-1; n-2k-1) weighted by pi^{n-2m+1}), m >= 1.
// Zero binomials are left out.
std::vector<SumRuleTerm> sum_rule_terms(const SumRuleSpec& spec);

// Term by term through the engine's moment cache, or as one integrand when fused.
SumRuleReport verify_sum_rule(const SumRuleSpec& spec, MomentEngine& engine, bool fused = false);
SumRuleReport verify_sum_rule(const SumRuleSpec& spec, const PrecisionContext& ctx, bool fused = false);

// A(n) = (2/pi)^4 2^{2n-1} [pi^2 IKM(3,5;2n-1) - IKM(1,7;2n-1)].
std::vector<WeightedTerm> crandall_terms(int n);
BoundedReal crandall_numeric(int n, MomentEngine& engine, bool fused = false);
BoundedReal crandall_numeric(int n, const PrecisionContext& ctx, bool fused = false);

// alpha_n^[m] for M = 2m, beta_n^[m] for M = 2m - 1, from their Bessel moment
// expansions.
std::vector<WeightedTerm> alpha_beta_terms(int M, int n);
BoundedReal alpha_beta_numeric(int M, int n, MomentEngine& engine, bool fused = false);
BoundedReal alpha_beta_numeric(int M, int n, const PrecisionContext& ctx, bool fused = false);

// The compact form 2^{1+2(n-1)[1-(-1)^M]} / pi^{M+1} int ((iota + i kappa)^M -
// (iota - i kappa)^M) / i kappa^M (2t)^{2n+M-3} dt, expanded independently of
// alpha/beta.
std::vector<WeightedTerm> compact_terms(int M, int n);
BoundedReal compact_numeric(int M, int n, MomentEngine& engine, bool fused = false);

}  // namespace bm
