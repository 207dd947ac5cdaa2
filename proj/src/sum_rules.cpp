#include "besselmoments/sum_rules.hpp"

#include "besselmoments/errors.hpp"
#include "besselmoments/exact_seq.hpp"

namespace bm {

namespace {

ExactInteger pow2(unsigned long e) {
  ExactInteger r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

std::vector<WeightedTerm> weighted(const std::vector<SumRuleTerm>& terms) {
  std::vector<WeightedTerm> out;
  for (const SumRuleTerm& t : terms) out.push_back({ExactRational(t.coeff), t.spec});
  return out;
}

BoundedReal evaluate(const std::vector<WeightedTerm>& terms, MomentEngine& engine, bool fused) {
  return fused ? engine.fused_sum(terms) : engine.weighted_sum(terms);
}

}  // namespace

void SumRuleSpec::validate() const {
  const int top = family == SumRuleFamily::Z ? n : n - 1;
  if (k < 1 || 2 * k > top)
    throw InvalidSpecError(std::string(family == SumRuleFamily::Z ? "Z" : "Y") + " sum rule needs " +
                           (family == SumRuleFamily::Z ? "n" : "n - 1") + " >= 2k >= 2, got n = " +
                           std::to_string(n) + ", k = " + std::to_string(k));
}

std::string SumRuleSpec::name() const {
  return std::string(family == SumRuleFamily::Z ? "Z" : "Y") + "_{" + std::to_string(2 * n) + "," +
         std::to_string(n - 2 * k) + "}";
}

std::vector<SumRuleTerm> sum_rule_terms(const SumRuleSpec& spec) {
  spec.validate();
  const int n = spec.n;
  std::vector<SumRuleTerm> terms;
  if (spec.family == SumRuleFamily::Z) {
    for (int m = 0; 2 * m <= n; ++m) {
      ExactInteger c = binomial(n, 2 * m);
      if (m % 2 == 1) c = -c;
      const int a = n - 2 * m;
      terms.push_back({c, MomentSpec{a, n + 2 * m, n - 2 * spec.k, a}, std::nullopt});
    }
  } else {
    for (int m = 1; 2 * m - 1 <= n; ++m) {
      ExactInteger c = binomial(n, 2 * m - 1);
      if (c == 0) continue;
      if (m % 2 == 1) c = -c;
      const int a = n - 2 * m + 1;
      terms.push_back({c, MomentSpec{a, n + 2 * m - 1, n - 2 * spec.k - 1, a}, std::nullopt});
    }
  }
  return terms;
}

SumRuleReport verify_sum_rule(const SumRuleSpec& spec, MomentEngine& engine, bool fused) {
  std::vector<SumRuleTerm> terms = sum_rule_terms(spec);
  const BoundedReal value = evaluate(weighted(terms), engine, fused);
  if (!fused)
    for (SumRuleTerm& t : terms) t.result = engine.moment(t.spec);
  const bool pass = abs(value.value) <= value.err;
  return SumRuleReport{spec, value, pass, std::move(terms)};
}

SumRuleReport verify_sum_rule(const SumRuleSpec& spec, const PrecisionContext& ctx, bool fused) {
  MomentEngine engine(ctx);
  return verify_sum_rule(spec, engine, fused);
}

std::vector<WeightedTerm> crandall_terms(int n) {
  if (n < 1) throw InvalidSpecError("Crandall numbers are indexed from 1");
  // (2/pi)^4 2^{2n-1} = 2^{2n+3} pi^-4
  const ExactRational scale(pow2(2 * static_cast<unsigned long>(n) + 3));
  const int c = 2 * n - 1;
  return {{scale, MomentSpec{3, 5, c, -2}}, {-scale, MomentSpec{1, 7, c, -4}}};
}

BoundedReal crandall_numeric(int n, MomentEngine& engine, bool fused) {
  return evaluate(crandall_terms(n), engine, fused);
}

BoundedReal crandall_numeric(int n, const PrecisionContext& ctx, bool fused) {
  MomentEngine engine(ctx);
  return crandall_numeric(n, engine, fused);
}

std::vector<WeightedTerm> alpha_beta_terms(int M, int n) {
  if (M < 1 || n < 1) throw InvalidSpecError("alpha/beta moments need M >= 1 and n >= 1");
  std::vector<WeightedTerm> terms;
  const int m = (M + 1) / 2;
  for (int l = 1; l <= m; ++l) {
    ExactInteger coeff = 4 * binomial(M, 2 * l - 1);
    if (l % 2 == 0) coeff = -coeff;
    MomentSpec s;
    if (M % 2 == 0) {
      // (4/pi^{2m+1}) (pi I0)^{2(m-l)+1} K0^{2(m+l)-1} (2t)^{2(n+m)-3}
      s = MomentSpec{2 * (m - l) + 1, 2 * (m + l) - 1, 2 * (n + m) - 3, -2 * l};
    } else {
      // (4/pi^{2m}) (pi I0)^{2(m-l)} K0^{2(m+l-1)} (2t)^{2(n+m-2)}
      s = MomentSpec{2 * (m - l), 2 * (m + l - 1), 2 * (n + m - 2), -2 * l};
    }
    terms.push_back({ExactRational(coeff * pow2(static_cast<unsigned long>(s.c))), s});
  }
  return terms;
}

BoundedReal alpha_beta_numeric(int M, int n, MomentEngine& engine, bool fused) {
  return evaluate(alpha_beta_terms(M, n), engine, fused);
}

BoundedReal alpha_beta_numeric(int M, int n, const PrecisionContext& ctx, bool fused) {
  MomentEngine engine(ctx);
  return alpha_beta_numeric(M, n, engine, fused);
}

std::vector<WeightedTerm> compact_terms(int M, int n) {
  if (M < 1 || n < 1) throw InvalidSpecError("compact form needs M >= 1 and n >= 1");
  // ((iota + i kappa)^M - (iota - i kappa)^M) / i = 2 sum_l (-1)^{l-1} C(M, 2l-1) iota^{M-2l+1} kappa^{2l-1}
  const unsigned long outer = 1 + (M % 2 == 1 ? 4UL * static_cast<unsigned long>(n - 1) : 0UL);
  const int c = 2 * n + M - 3;
  std::vector<WeightedTerm> terms;
  for (int l = 1; 2 * l - 1 <= M; ++l) {
    ExactInteger coeff = 2 * binomial(M, 2 * l - 1) * pow2(outer + static_cast<unsigned long>(c));
    if (l % 2 == 0) coeff = -coeff;
    const int a = M - 2 * l + 1;
    // pi^a from iota, pi^{-(M+1)} from the prefactor
    terms.push_back({ExactRational(coeff), MomentSpec{a, M + 2 * l - 1, c, a - (M + 1)}});
  }
  return terms;
}

BoundedReal compact_numeric(int M, int n, MomentEngine& engine, bool fused) {
  return evaluate(compact_terms(M, n), engine, fused);
}

}  // namespace bm
