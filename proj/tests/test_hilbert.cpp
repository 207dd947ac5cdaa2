#include <doctest.h>

#include "besselmoments/bessel.hpp"
#include "besselmoments/errors.hpp"
#include "besselmoments/hilbert.hpp"
#include "test_support.hpp"

using namespace bm;
using bm::test::R;
using bm::test::pow10;

namespace {

const PVFunction kAll[] = {PVFunction::kappa_sq,   PVFunction::iota_kappa_sgn, PVFunction::kappa_plus,
                           PVFunction::kappa_minus, PVFunction::iota_plus,      PVFunction::iota_minus};

}  // namespace

TEST_CASE("function values") {
  const PrecisionContext ctx(40);
  const Real one = ctx.make(1L);
  const Real i1 = i0(one, ctx).value;
  const Real k1 = k0(one, ctx).value;
  const Real e = exp(one);
  const Real pi = ctx.pi();
  const Real tol = pow10(-38, ctx);
  CHECK(abs(pv_function(PVFunction::kappa_sq, -one, ctx).value - k1 * k1) < tol);
  CHECK(abs(pv_function(PVFunction::iota_kappa_sgn, -one, ctx).value + pi * i1 * k1) < tol);
  CHECK(abs(pv_function(PVFunction::kappa_plus, one, ctx).value - k1 / e) < tol);
  CHECK(abs(pv_function(PVFunction::kappa_plus, -one, ctx).value - k1 * e) < tol);
  CHECK(abs(pv_function(PVFunction::kappa_minus, one, ctx).value - k1 * e) < tol);
  CHECK(abs(pv_function(PVFunction::iota_plus, one, ctx).value - pi * i1 / e) < tol);
  CHECK(pv_function(PVFunction::iota_plus, -one, ctx).value.is_zero());
  CHECK(pv_function(PVFunction::iota_minus, one, ctx).value.is_zero());
  CHECK(abs(pv_function(PVFunction::iota_minus, -one, ctx).value - pi * i1 / e) < tol);
}

TEST_CASE("Feynman rules at sample points") {
  const PrecisionContext ctx(50);
  // pi I0(1) K0(1), mpmath
  const Real expected = R("1.67460923487777273858163331542863988449158680043598047539721", ctx);
  const auto kk = hilbert_pv({PVFunction::kappa_sq, ctx.make(1L)}, ctx);
  CHECK(abs(kk.value - expected) < pow10(-48, ctx));

  // -K0(2)^2
  const Real k2 = R("0.11389387274953343565271957493248183299832662438880888289253", ctx);
  const auto ik = hilbert_pv({PVFunction::iota_kappa_sgn, ctx.make(2L)}, ctx);
  CHECK(abs(ik.value + k2 * k2) < pow10(-45, ctx));

  // -K0(1) e
  const auto ip = hilbert_pv({PVFunction::iota_plus, ctx.make(-1L)}, ctx);
  const Real k1e = R("0.42102443824070833333562737921260903613621974822666", ctx) * exp(ctx.make(1L));
  CHECK(abs(ip.value + k1e) < pow10(-45, ctx));
}

TEST_CASE("all functions against their images") {
  const PrecisionContext ctx(30);
  for (PVFunction f : kAll)
    for (const char* xs : {"0.5", "-2", "3.25"}) {
      CAPTURE(to_string(f));
      CAPTURE(xs);
      const Real x = R(xs, ctx);
      const auto pv = hilbert_pv({f, x}, ctx);
      const auto image = hilbert_image(f, x, ctx);
      CHECK(abs(pv.value - image.value) < pow10(-25, ctx));
      CHECK(abs(pv.value - image.value) <= pv.err + image.err);
    }
}

TEST_CASE("transform applied twice") {
  const PrecisionContext ctx(30);
  const Real x = ctx.make(0.75);
  // H(H kappa^2) = H(iota kappa sgn) = -kappa^2
  const auto twice = hilbert_pv({PVFunction::iota_kappa_sgn, x}, ctx);
  CHECK(abs(twice.value + pv_function(PVFunction::kappa_sq, x, ctx).value) < pow10(-25, ctx));
}

TEST_CASE("names") {
  for (PVFunction f : kAll) CHECK(parse_pv_function(to_string(f)) == f);
  CHECK_THROWS_AS(parse_pv_function("sigma"), InvalidSpecError);
}

TEST_CASE("points near the singularity are rejected") {
  const PrecisionContext ctx(20);
  CHECK_THROWS_AS(hilbert_pv({PVFunction::kappa_sq, ctx.make(1e-4)}, ctx), DomainError);
  CHECK_THROWS_AS(hilbert_pv({PVFunction::kappa_sq, ctx.zero()}, ctx), DomainError);
  PVOptions loose;
  loose.min_abs_x = 1e-5;
  const auto r = hilbert_pv({PVFunction::kappa_plus, ctx.make(1e-4)}, ctx, loose);
  CHECK(abs(r.value - hilbert_image(PVFunction::kappa_plus, ctx.make(1e-4), ctx).value) < pow10(-15, ctx));
}
