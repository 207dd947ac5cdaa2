#include <doctest.h>

#include "besselmoments/errors.hpp"
#include "besselmoments/moment.hpp"
#include "test_support.hpp"

using namespace bm;
using bm::test::pow10;
using bm::test::rel_deviation;

TEST_CASE("K0 squared moments") {
  const PrecisionContext ctx(50);
  MomentEngine engine(ctx);
  const Real pi2 = ctx.pi() * ctx.pi();
  // pi^2 / 4 and pi^2 / 32
  const auto& m0 = engine.moment({0, 2, 0, 0});
  CHECK(rel_deviation(m0.value, pi2 / 4L) < pow10(-48, ctx));
  CHECK(m0.value.err < pow10(-48, ctx));
  CHECK(abs(m0.value.value - pi2 / 4L) <= m0.value.err);
  const auto& m1 = engine.moment({0, 2, 2, 0});
  CHECK(rel_deviation(m1.value, pi2 / 32L) < pow10(-48, ctx));
}

TEST_CASE("I0 K0 cubed") {
  const PrecisionContext ctx(50);
  const auto r = moment({1, 3, 1, 0}, ctx);
  CHECK(rel_deviation(r.value, ctx.pi() * ctx.pi() / 16L) < pow10(-48, ctx));
  CHECK(r.nodes_used > 0);
  CHECK(r.level >= 3);
}

TEST_CASE("reference values") {
  const PrecisionContext ctx(50);
  MomentEngine engine(ctx);
  // mpmath, 70 digits
  const std::pair<MomentSpec, const char*> cases[] = {
      {{0, 3, 0, 0}, "6.948822781079629789436436445470829757674851132609891735162380688191422"},
      {{0, 4, 1, 0}, "1.051799790264644999724770891322518741919363005797936521568237610924108"},
      {{1, 2, 1, 0}, "0.6045997880780726168646927525473852440946887493642468585232949784627077"},
      {{2, 2, 0, 0}, "2.760124652493590100476421680873274816182487708742936463477495948762601"},
  };
  for (const auto& [spec, text] : cases) {
    const auto& r = engine.moment(spec);
    const Real expected = bm::test::R(text, ctx);
    CHECK(rel_deviation(r.value, expected) < pow10(-48, ctx));
    CHECK(abs(r.value.value - expected) <= r.value.err + pow10(-65, ctx));
  }
}

TEST_CASE("pi weight") {
  const PrecisionContext ctx(30);
  MomentEngine engine(ctx);
  const auto& plain = engine.moment({1, 3, 1, 0});
  const auto& weighted = engine.moment({1, 3, 1, -2});
  CHECK(rel_deviation(weighted.value, Real::ratio(1, 16, ctx.bits())) < pow10(-28, ctx));
  CHECK(rel_deviation(plain.value, weighted.value.value * ctx.pi() * ctx.pi()) < pow10(-28, ctx));
}

TEST_CASE("equal powers") {
  const PrecisionContext ctx(50);
  MomentEngine engine(ctx);
  // pi^2 IKM(2,2;0) = IKM(0,4;0)
  const auto& lhs = engine.moment({2, 2, 0, 2});
  const auto& rhs = engine.moment({0, 4, 0, 0});
  CHECK(abs(lhs.value.value - rhs.value.value) <= lhs.value.err + rhs.value.err);
  CHECK(lhs.value.err < pow10(-45, ctx));
  CHECK(lhs.tail_cutoff > pow10(100, ctx));
}

TEST_CASE("split invariance") {
  const PrecisionContext ctx(40);
  for (MomentSpec s : {MomentSpec{0, 3, 0, 0}, MomentSpec{2, 5, 3, 0}, MomentSpec{3, 3, 1, 0}}) {
    MomentOptions at_two;
    at_two.split_point = 2.0;
    const auto one = moment(s, ctx);
    const auto two = moment(s, ctx, at_two);
    CHECK(abs(one.value.value - two.value.value) <= one.value.err + two.value.err);
    CHECK(two.split_point == 2L);
  }
}

TEST_CASE("tail bound dominates the integral beyond the cutoff") {
  const PrecisionContext ctx(30);
  for (MomentSpec s : {MomentSpec{0, 2, 0, 0}, MomentSpec{1, 3, 5, 0}, MomentSpec{3, 5, 9, 1}, MomentSpec{2, 3, 0, 0}}) {
    for (long T : {5L, 10L, 20L}) {
      const Real t(T, ctx.bits());
      const auto direct = tanh_sinh([&](const Real& x) { return integrand(s, x, ctx); },
                                    Domain::finite(t, t * 2L), ctx);
      CHECK(tail_bound(s, t, ctx) > direct.value.value);
    }
  }
  // Cutoffs make the bound negligible at working precision.
  const MomentSpec s{1, 3, 5, 0};
  CHECK(tail_bound(s, tail_cutoff(s, ctx), ctx) < pow10(-(ctx.working_digits() + 5), ctx));
}

TEST_CASE("equal-power tail bound") {
  const PrecisionContext ctx(30);
  const MomentSpec s{2, 2, 0, 0};
  const auto direct = tanh_sinh([&](const Real& x) { return integrand(s, x, ctx); },
                                Domain::to_infinity(ctx.make(3L)), ctx);
  CHECK(tail_bound(s, ctx.make(3L), ctx) > direct.value.value);
}

TEST_CASE("invalid moments") {
  const PrecisionContext ctx(20);
  CHECK_THROWS_AS(moment({3, 2, 0, 0}, ctx), DivergenceError);
  CHECK_THROWS_AS(moment({2, 2, 1, 0}, ctx), DivergenceError);
  CHECK_THROWS_AS(moment({-1, 2, 0, 0}, ctx), InvalidSpecError);
  MomentOptions bad;
  bad.split_point = 0.0;
  CHECK_THROWS_AS(moment({0, 2, 0, 0}, ctx, bad), DomainError);
}

TEST_CASE("weighted sums") {
  const PrecisionContext ctx(50);
  CHECK(weighted_moment_sum({}, ctx).value.is_zero());
  CHECK(weighted_moment_sum({}, ctx).err.is_zero());

  const auto z40 = weighted_moment_sum({{1, {2, 2, 0, 2}}, {-1, {0, 4, 0, 0}}}, ctx);
  CHECK(abs(z40.value) <= z40.err);
  CHECK(z40.err < pow10(-30, ctx));

  const auto z61 = weighted_moment_sum({{1, {3, 3, 1, 3}}, {-3, {1, 5, 1, 1}}}, ctx);
  CHECK(abs(z61.value) <= z61.err);
  CHECK(z61.err < pow10(-30, ctx));

  // Repeated specs are reused, rational coefficients are exact.
  const auto twice = weighted_moment_sum({{make_rational(1, 3), {0, 2, 0, 0}}, {make_rational(2, 3), {0, 2, 0, 0}}}, ctx);
  CHECK(rel_deviation(twice, ctx.pi() * ctx.pi() / 4L) < pow10(-48, ctx));
}

TEST_CASE("fused sums") {
  const PrecisionContext ctx(40);
  MomentEngine engine(ctx);
  const std::vector<WeightedTerm> z61{{1, {3, 3, 1, 3}}, {-3, {1, 5, 1, 1}}};
  const auto fused = engine.fused_sum(z61);
  CHECK(abs(fused.value) <= fused.err);
  CHECK(fused.err < pow10(-30, ctx));
  const auto single = engine.fused_sum({{2, {0, 2, 0, 0}}});
  CHECK(rel_deviation(single, ctx.pi() * ctx.pi() / 2L) < pow10(-38, ctx));
  CHECK(engine.fused_sum({}).value.is_zero());
}

TEST_CASE("deterministic") {
  const PrecisionContext ctx(30);
  const auto a = moment({1, 4, 2, 0}, ctx);
  const auto b = moment({1, 4, 2, 0}, ctx);
  CHECK(a.value.value.to_string(40) == b.value.value.to_string(40));
  CHECK(a.value.err.to_string(10) == b.value.err.to_string(10));
}
