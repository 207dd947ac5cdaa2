#include "besselmoments/exact_seq.hpp"

#include <mutex>

#include "besselmoments/errors.hpp"

namespace bm {

namespace {

// Grows on demand; values are copied out under the lock.
class FactorialTable {
 public:
  ExactInteger get(long n) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (table_.empty()) table_.emplace_back(1);
    while (static_cast<long>(table_.size()) <= n) {
      const long k = static_cast<long>(table_.size());
      table_.push_back(table_.back() * k);
    }
    return table_[n];
  }

 private:
  std::mutex mutex_;
  std::vector<ExactInteger> table_;
};

FactorialTable& factorials() {
  static FactorialTable table;
  return table;
}

class DombTable {
 public:
  ExactInteger get(long n) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      if (n < static_cast<long>(table_.size())) return table_[n];
    }
    ExactInteger sum = 0;
    for (long k = 0; k <= n; ++k) {
      const ExactInteger c = binomial(n, k);
      sum += c * c * binomial(2 * (n - k), n - k) * binomial(2 * k, k);
    }
    std::lock_guard<std::mutex> lock(mutex_);
    // Values are deterministic, so a concurrent fill of the same slot is harmless.
    if (static_cast<long>(table_.size()) == n) table_.push_back(sum);
    return sum;
  }

 private:
  std::mutex mutex_;
  std::vector<ExactInteger> table_;
};

void require(bool ok, const char* what) {
  if (!ok) throw InvalidSpecError(what);
}

// [(2j)!]^3 / (j!)^4 = C(2j, j)^2 (2j)!
ExactInteger cube_ratio(long j) {
  const ExactInteger c = binomial(2 * j, j);
  return c * c * factorial(2 * j);
}

ExactInteger pow2(unsigned long e) {
  ExactInteger r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

SeriesPoly alpha_series(long terms) {
  std::vector<ExactRational> c;
  for (long l = 1; l <= terms; ++l) c.emplace_back(alpha(l));
  return SeriesPoly(std::move(c));
}

}  // namespace

SeriesPoly::SeriesPoly(std::vector<ExactRational> c) : coefficients(std::move(c)) { trim(); }

ExactRational SeriesPoly::coefficient(long k) const {
  if (k < 0 || k > degree()) return 0;
  return coefficients[k];
}

void SeriesPoly::trim() {
  while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
}

SeriesPoly multiply(const SeriesPoly& p, const SeriesPoly& q, long max_degree) {
  if (p.degree() < 0 || q.degree() < 0) return SeriesPoly();
  const long deg = std::min(p.degree() + q.degree(), max_degree);
  std::vector<ExactRational> c(deg + 1, ExactRational(0));
  for (long i = 0; i <= std::min(p.degree(), deg); ++i) {
    if (p.coefficients[i] == 0) continue;
    for (long j = 0; j <= std::min(q.degree(), deg - i); ++j) c[i + j] += p.coefficients[i] * q.coefficients[j];
  }
  return SeriesPoly(std::move(c));
}

SeriesPoly power(const SeriesPoly& p, long m, long max_degree) {
  if (m < 0) throw InvalidSpecError("negative polynomial power");
  SeriesPoly result(std::vector<ExactRational>{ExactRational(1)});
  for (long i = 0; i < m; ++i) result = multiply(result, p, max_degree);
  return result;
}

ExactInteger factorial(long n) {
  require(n >= 0, "factorial of a negative number");
  return factorials().get(n);
}

ExactInteger binomial(long n, long k) {
  require(n >= 0, "binomial with negative n");
  if (k < 0 || k > n) return 0;
  ExactInteger r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

ExactInteger domb(long n) {
  require(n >= 0, "Domb numbers are indexed from 0");
  static DombTable table;
  // Fill in order so the table stays dense.
  for (long k = 0; k < n; ++k) table.get(k);
  return table.get(n);
}

ExactInteger alpha(long ell) {
  require(ell >= 1, "alpha is indexed from 1");
  const ExactInteger f = factorial(ell - 1);
  const ExactInteger num = f * f * domb(ell - 1);
  const ExactInteger den = pow2(2 * static_cast<unsigned long>(ell - 1));
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw ConsistencyError("4^" + std::to_string(ell - 1) + " does not divide ((l-1)!)^2 D_{l-1} at l = " +
                           std::to_string(ell));
  return num / den;
}

ExactInteger alpha_m(long m, long n) {
  require(m >= 1 && n >= 1, "alpha_m needs m >= 1 and n >= 1");
  const ExactRational c = power(alpha_series(n), m, n - 1).coefficient(n - 1);
  if (c.get_den() != 1) throw ConsistencyError("alpha_m produced a non-integer");
  return c.get_num();
}

ExactInteger crandall(long n) {
  require(n >= 1, "Crandall numbers are indexed from 1");
  if (n == 1) return 0;
  return alpha_m(2, n - 1);
}

ExactRational crandall_explicit(long n) {
  require(n >= 1, "crandall_explicit needs n >= 1");
  std::vector<ExactInteger> h;
  for (long j = 0; j < n; ++j) h.push_back(cube_ratio(j));
  ExactInteger sum = 0;
  for (long m = 1; m <= n; ++m)
    for (long l = 1; l <= m; ++l)
      for (long k = 1; k <= l; ++k) sum += h[n - m] * h[m - l] * h[l - k] * h[k - 1];
  return make_rational(sum, pow2(4 * static_cast<unsigned long>(n - 1)));
}

ExactRational k0sq_moment_rational(long n) {
  require(n >= 0, "k0sq moments are indexed from 0");
  return make_rational(cube_ratio(n), pow2(2 * static_cast<unsigned long>(3 * n + 1)));
}

ExactRational ikkk_moment_rational(long ell) {
  require(ell >= 1, "ikkk moments are indexed from 1");
  ExactInteger sum = 0;
  for (long k = 1; k <= ell; ++k) sum += cube_ratio(ell - k) * cube_ratio(k - 1);
  return make_rational(sum, pow2(2 * static_cast<unsigned long>(3 * ell - 1)));
}

ExactRational beta_m(long m, long n) {
  require(m >= 1 && n >= 1, "beta_m needs m >= 1 and n >= 1");
  std::vector<ExactRational> k0sq;
  for (long k = 0; k < n; ++k) k0sq.push_back(make_rational(cube_ratio(k), pow2(4 * static_cast<unsigned long>(k))));
  const SeriesPoly p = multiply(power(alpha_series(n), m - 1, n - 1), SeriesPoly(std::move(k0sq)), n - 1);
  return p.coefficient(n - 1);
}

ExactInteger broadhurst_roberts(long M, long n) {
  require(M >= 1 && n >= 1, "broadhurst_roberts needs M >= 1 and n >= 1");
  ExactRational v;
  if (M % 2 == 0) {
    v = alpha_m(M / 2, n);
  } else {
    v = beta_m((M + 1) / 2, n) * ExactRational(pow2(4 * static_cast<unsigned long>(n - 1)));
  }
  if (v.get_den() != 1 || v <= 0)
    throw ConsistencyError("Broadhurst-Roberts value is not a positive integer at M = " + std::to_string(M) +
                           ", n = " + std::to_string(n));
  return v.get_num();
}

Real hyp_3f2_term_ratio(long k, const Real& x) {
  const mpfr_prec_t bits = x.precision();
  // (k+1/3)(k+1/2)(k+2/3) = (3k+1)(2k+1)(3k+2)/18
  const ExactInteger num = ExactInteger(3 * k + 1) * (2 * k + 1) * (3 * k + 2);
  ExactInteger den = ExactInteger(k + 1) * (k + 1) * (k + 1) * 18;
  return to_real(make_rational(num, den), bits) * x;
}

BoundedReal hyp_3f2(const Real& x, const PrecisionContext& ctx, long max_terms) {
  const Real ax = abs(x);
  if (!(ax < 1L)) throw DomainError("3F2(1/3,1/2,2/3;1,1;x) needs |x| < 1");
  if (x.is_zero()) return BoundedReal::exact(ctx.make(1L));
  Real xw(ctx.bits());
  mpfr_set(xw.get(), x.get(), MPFR_RNDN);
  const Real eps = ctx.working_epsilon();
  const Real one_minus = ctx.make(1L) - ax;

  Real sum = ctx.make(1L);
  Real term = ctx.make(1L);
  Real rounding = ctx.zero();  // sum of |t_k| * (relative error of t_k)
  Real slope = ctx.zero();     // sum of k |t_k|: sensitivity to the rounding of x
  for (long k = 0;; ++k) {
    const Real tail = abs(term) * ax / one_minus;
    if (tail <= eps * abs(sum) || term.is_zero()) {
      BoundedReal r(sum, tail + rounding + slope * ctx.ulp() + abs(sum) * ctx.ulp() * 2L);
      return r;
    }
    if (k >= max_terms)
      throw PrecisionError("3F2 series did not converge within " + std::to_string(max_terms) + " terms at x = " +
                               x.to_string(10),
                           sum.to_string(ctx.target_digits()), tail.to_string(3));
    term *= hyp_3f2_term_ratio(k, xw);
    sum += term;
    rounding += abs(term) * ctx.ulp() * (2L * (k + 1) + 2L);
    slope += abs(term) * (k + 1);
  }
}

BoundedReal rogers_check(const ExactRational& u, long N, const PrecisionContext& ctx) {
  if (N < 10) throw InvalidSpecError("rogers_check needs N >= 10");
  if (!(abs(u) * 4 < 1)) throw DomainError("rogers_check needs |u| < 1/4 for its truncation bound");
  const ExactRational one_minus_u = 1 - u;
  ExactRational x = 27 * u * u / (4 * one_minus_u * one_minus_u * one_minus_u);
  x.canonicalize();
  if (!(abs(x) < 1)) throw DomainError("27u^2/(4(1-u)^3) lies outside the unit disc");

  const BoundedReal lhs = hyp_3f2(to_real(x, ctx.bits()), ctx);

  ExactRational series = 0;
  ExactRational power = 1;
  const ExactRational quarter_u = u / 4;
  for (long n = 0; n <= N; ++n) {
    series += ExactRational(domb(n)) * power;
    power *= quarter_u;
  }
  ExactRational rhs_exact = one_minus_u * series;
  rhs_exact.canonicalize();
  const Real rhs = to_real(rhs_exact, ctx.bits());

  // sum_{n>N} D_n |u|^n / 4^n <= sum_{n>N} (4|u|)^n
  const Real q = to_real(ExactRational(abs(u) * 4), ctx.bits());
  const Real tail = pow(q, N + 1) / (ctx.make(1L) - q) * to_real(ExactRational(abs(one_minus_u)), ctx.bits());

  BoundedReal diff(abs(lhs.value - rhs), lhs.err + abs(rhs) * ctx.ulp() * 2L + tail);
  return diff;
}

}  // namespace bm
