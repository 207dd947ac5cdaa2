#pragma once

#include <vector>

#include "besselmoments/bounded_real.hpp"
#include "besselmoments/exact.hpp"
#include "besselmoments/precision.hpp"

namespace bm {

/// Polynomial with rational coefficients, index = degree. Trailing zeros are
/// trimmed, so the zero polynomial has no coefficients and degree -1.
struct SeriesPoly {
  std::vector<ExactRational> coefficients;

  SeriesPoly() = default;
  explicit SeriesPoly(std::vector<ExactRational> c);

  long degree() const { return static_cast<long>(coefficients.size()) - 1; }
  // Coefficient of x^k (0 beyond the degree).
  ExactRational coefficient(long k) const;
  void trim();
};

SeriesPoly multiply(const SeriesPoly& p, const SeriesPoly& q, long max_degree);
// p^m truncated at max_degree; p^0 = 1.
SeriesPoly power(const SeriesPoly& p, long m, long max_degree);

// Memoized per process; safe to call from several threads.
ExactInteger factorial(long n);
ExactInteger binomial(long n, long k);

// D_n = sum_k C(n,k)^2 C(2(n-k),n-k) C(2k,k).
ExactInteger domb(long n);
// alpha_l = ((l-1)!)^2 D_{l-1} / 4^{l-1}; ConsistencyError if the division is not exact.
ExactInteger alpha(long ell);
// Coefficient of x^{n-1} in (sum_{l=1}^{n} alpha_l x^{l-1})^m.
ExactInteger alpha_m(long m, long n);
// A(1) = 0, A(n+1) = alpha_m(2, n).
ExactInteger crandall(long n);
// A(n+1) from the triple sum over m >= l >= k of products of [(2j)!]^3/(j!)^4,
// divided by 2^{4(n-1)}; kept rational so a non-integer would show.
ExactRational crandall_explicit(long n);

// int_0^inf K0^2 t^{2n} dt = pi^2 r with r = [(2n)!]^3 / (4^{3n+1} (n!)^4).
ExactRational k0sq_moment_rational(long n);
// int_0^inf I0 K0^3 t^{2l-1} dt = pi^2 r.
ExactRational ikkk_moment_rational(long ell);
// Coefficient of x^{n-1} in [sum (l!)^2 D_l/4^l x^l]^{m-1} sum [(2k)!]^3/(2^{4k}(k!)^4) x^k.
ExactRational beta_m(long m, long n);
// The compact Broadhurst-Roberts integer: alpha_n^[m] for M = 2m and
// 2^{4(n-1)} beta_n^[m] for M = 2m - 1. ConsistencyError if not a positive integer.
ExactInteger broadhurst_roberts(long M, long n);

// 3F2(1/3, 1/2, 2/3; 1, 1; x) for |x| < 1. x is taken to carry one rounding.
// Terms are summed until the ratio-test tail bound |t_k| |x| / (1 - |x|) drops
// below working precision; PrecisionError if that needs more than max_terms.
BoundedReal hyp_3f2(const Real& x, const PrecisionContext& ctx, long max_terms = 100000);
// t_{k+1} / t_k = (k+1/3)(k+1/2)(k+2/3) / (k+1)^3 * x.
Real hyp_3f2_term_ratio(long k, const Real& x);

// |3F2(.., 27u^2/(4(1-u)^3)) - (1-u) sum_{n<=N} D_n u^n / 4^n|. The right side is
// summed exactly; its tail (D_n <= 16^n) and the left side's error go into err.
// Needs |u| < 1/4 and N >= 10.
BoundedReal rogers_check(const ExactRational& u, long N, const PrecisionContext& ctx);

}  // namespace bm
