#include <doctest.h>

#include <string>
#include <vector>

#include "besselmoments/errors.hpp"
#include "besselmoments/exact_seq.hpp"
#include "test_support.hpp"

using namespace bm;
using bm::test::R;
using bm::test::pow10;

namespace {

// Direct summation in Python (fractions, math.comb).
const std::vector<std::string> kDomb = {"1",      "4",      "28",      "256",      "2716",       "31504",
                                        "387136", "4951552", "65218204", "878536624", "12046924528"};
const std::vector<std::string> kAlpha = {"1",          "1",          "7",             "144",
                                         "6111",       "443025",     "48996900",      "7676839800",
                                         "1617819072975", "441312282364275", "151287254671179375",
                                         "63666910466222332500"};
const std::vector<std::string> kCrandall = {"0",      "1",        "2",           "15",          "302",
                                            "12559",  "900288",   "98986140",    "15459635718", "3251842717671"};

ExactRational Q(const char* s) { return parse_rational(s); }

}  // namespace

TEST_CASE("Domb numbers") {
  for (std::size_t n = 0; n < kDomb.size(); ++n) CHECK(to_string(domb(static_cast<long>(n))) == kDomb[n]);
  CHECK_THROWS_AS(domb(-1), InvalidSpecError);
}

TEST_CASE("alpha") {
  for (std::size_t l = 1; l <= kAlpha.size(); ++l) CHECK(to_string(alpha(static_cast<long>(l))) == kAlpha[l - 1]);
  CHECK_THROWS_AS(alpha(0), InvalidSpecError);
}

TEST_CASE("alpha is an integer up to 200") {
  for (long l = 1; l <= 200; ++l) {
    const ExactInteger f = factorial(l - 1);
    const ExactInteger lhs = alpha(l) * (ExactInteger(1) << (2 * (l - 1)));
    CHECK(lhs == f * f * domb(l - 1));
    CHECK(alpha(l) > 0);
    if (l > 1) {
      // alpha_{l+1} - l^2 alpha_l = (l!)^2 (D_l/4^l - D_{l-1}/4^{l-1}) is an integer by construction of both.
      const ExactRational gap = ExactRational(alpha(l)) - ExactRational((l - 1) * (l - 1)) * ExactRational(alpha(l - 1));
      CHECK(gap.get_den() == 1);
    }
  }
}

TEST_CASE("alpha_m") {
  for (long n = 1; n <= 10; ++n) CHECK(alpha_m(1, n) == alpha(n));
  CHECK(alpha_m(2, 1) == 1);
  CHECK(alpha_m(2, 2) == 2);
  const char* cubes[] = {"1", "3", "24", "475", "19365", "1372368"};
  for (long n = 1; n <= 6; ++n) CHECK(to_string(alpha_m(3, n)) == cubes[n - 1]);
}

TEST_CASE("power series convolution is associative on the alpha series") {
  std::vector<ExactRational> c;
  for (long l = 1; l <= 12; ++l) c.emplace_back(alpha(l));
  const SeriesPoly p(c);
  for (long m1 = 1; m1 <= 3; ++m1)
    for (long m2 = 1; m2 <= 3; ++m2) {
      const SeriesPoly split = multiply(power(p, m1, 11), power(p, m2, 11), 11);
      for (long n = 1; n <= 12; ++n) CHECK(split.coefficient(n - 1) == ExactRational(alpha_m(m1 + m2, n)));
    }
}

TEST_CASE("Domb series coefficients are the alpha values") {
  for (long l = 0; l <= 30; ++l) {
    const ExactInteger f = factorial(l);
    const ExactRational c = make_rational(f * f * domb(l), ExactInteger(1) << (2 * l));
    CHECK(c == ExactRational(alpha(l + 1)));
  }
}

TEST_CASE("Crandall numbers") {
  for (std::size_t n = 1; n <= kCrandall.size(); ++n) CHECK(to_string(crandall(static_cast<long>(n))) == kCrandall[n - 1]);
  CHECK(to_string(crandall(20)) == "25983170467238974398312898805821981228125");
  CHECK(crandall_explicit(1) == 1);
  CHECK(crandall_explicit(2) == 2);
  for (long n = 1; n <= 20; ++n) {
    const ExactRational e = crandall_explicit(n);
    CHECK(e.get_den() == 1);
    CHECK(e == ExactRational(crandall(n + 1)));
  }
}

TEST_CASE("moment rationals") {
  CHECK(k0sq_moment_rational(0) == Q("1/4"));
  CHECK(k0sq_moment_rational(1) == Q("1/32"));
  CHECK(k0sq_moment_rational(2) == Q("27/512"));
  CHECK(ikkk_moment_rational(1) == Q("1/16"));
  CHECK(ikkk_moment_rational(2) == Q("1/64"));
  for (long l = 1; l <= 12; ++l)
    CHECK(ikkk_moment_rational(l) * ExactRational(ExactInteger(1) << (2 * (l + 1))) == ExactRational(alpha(l)));
}

TEST_CASE("beta_m") {
  CHECK(beta_m(1, 1) == 1);
  CHECK(beta_m(1, 2) == Q("1/2"));
  const char* b1[] = {"1", "1/2", "27/8", "1125/16", "385875/128"};
  const char* b2[] = {"1", "3/2", "87/8", "3539/16", "1189323/128"};
  const char* b3[] = {"1", "5/2", "155/8", "6185/16", "2037235/128"};
  for (long n = 1; n <= 5; ++n) {
    CHECK(to_string(beta_m(1, n)) == b1[n - 1]);
    CHECK(to_string(beta_m(2, n)) == b2[n - 1]);
    CHECK(to_string(beta_m(3, n)) == b3[n - 1]);
  }
}

TEST_CASE("beta denominators divide 2^{2(n-1)}") {
  for (long m = 1; m <= 10; ++m)
    for (long n = 1; n <= 10; ++n) {
      const ExactRational b = beta_m(m, n);
      CHECK(b > 0);
      const ExactRational scaled = b * ExactRational(ExactInteger(1) << (2 * (n - 1)));
      CHECK(scaled.get_den() == 1);
    }
}

TEST_CASE("Broadhurst-Roberts integers") {
  for (long n = 1; n <= 6; ++n) CHECK(broadhurst_roberts(2, n) == alpha(n));
  CHECK(broadhurst_roberts(4, 1) == crandall(2));
  for (long n = 1; n <= 6; ++n) CHECK(broadhurst_roberts(4, n) == crandall(n + 1));
  const char* m1[] = {"1", "8", "864", "288000", "197568000"};
  const char* m3[] = {"1", "24", "2784", "905984", "608933376"};
  for (long n = 1; n <= 5; ++n) {
    CHECK(to_string(broadhurst_roberts(1, n)) == m1[n - 1]);
    CHECK(to_string(broadhurst_roberts(3, n)) == m3[n - 1]);
  }
  for (long M = 1; M <= 6; ++M)
    for (long n = 1; n <= 8; ++n) CHECK(broadhurst_roberts(M, n) > 0);
  CHECK_THROWS_AS(broadhurst_roberts(0, 1), InvalidSpecError);
}

TEST_CASE("3F2 series") {
  const PrecisionContext ctx(50);
  const auto zero = hyp_3f2(ctx.zero(), ctx);
  CHECK(zero.value == 1L);
  CHECK(zero.err.is_zero());

  // mpmath hyp3f2, 70 digits
  const auto half = hyp_3f2(ctx.make(0.5), ctx);
  CHECK(abs(half.value - R("1.072246865323108831571811155604079058535999137735376831183158402905102", ctx)) <
        pow10(-48, ctx));
  CHECK(half.err < pow10(-40, ctx));
  const auto neg = hyp_3f2(R("-0.9", ctx), ctx);
  CHECK(abs(neg.value - R("0.9251917500713872063701253092301375002562767330110694852028711606243871", ctx)) <
        pow10(-45, ctx));

  const Real x = ctx.make(0.3);
  CHECK(abs(hyp_3f2_term_ratio(100000, x) / x - 1L) < pow10(-4, ctx));
  CHECK(hyp_3f2_term_ratio(10, x) < x);

  CHECK_THROWS_AS(hyp_3f2(ctx.make(1L), ctx), DomainError);
  CHECK_THROWS_AS(hyp_3f2(ctx.make(0.999), ctx, 50), PrecisionError);
}

TEST_CASE("Rogers identity") {
  const PrecisionContext ctx(50);
  const auto zero = rogers_check(0, 10, ctx);
  CHECK(zero.value.is_zero());

  const auto a = rogers_check(Q("1/16"), 120, ctx);
  CHECK(a.value < pow10(-30, ctx));
  CHECK(a.value <= a.err);
  const auto b = rogers_check(Q("1/10"), 150, ctx);
  CHECK(b.value < pow10(-30, ctx));
  const auto c = rogers_check(Q("-1/10"), 150, ctx);
  CHECK(c.value <= c.err);
  CHECK(c.value < pow10(-30, ctx));

  // Too short a truncation shows up as a real difference, covered by the bound.
  const auto coarse = rogers_check(Q("1/5"), 10, ctx);
  CHECK(coarse.value > pow10(-10, ctx));
  CHECK(coarse.value <= coarse.err);

  CHECK_THROWS_AS(rogers_check(Q("1/16"), 5, ctx), InvalidSpecError);
  CHECK_THROWS_AS(rogers_check(Q("1/3"), 50, ctx), DomainError);
}
