// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "besselmoments/errors.hpp"
#include "besselmoments/exact_seq.hpp"
#include "besselmoments/hilbert.hpp"
#include "besselmoments/ladder.hpp"
#include "besselmoments/moment.hpp"
#include "besselmoments/sum_rules.hpp"

using namespace bm;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> values;  // decimal strings compared by the determinism criterion

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string fmt(const Real& x) { return x.to_string(4); }

Real pow10(long e, const PrecisionContext& ctx) { return bm::pow10(e, ctx.bits()); }

Outcome closed_form_k0sq(const PrecisionContext& ctx) {
  Outcome o;
  MomentEngine engine(ctx);
  Real worst = ctx.zero();
  double slowest = 0;
  for (int n = 0; n <= 5; ++n) {
    const auto t0 = Clock::now();
    const MomentResult& r = engine.moment({0, 2, 2 * n, 0});
    slowest = std::max(slowest, seconds_since(t0));
    const Real exact = ctx.pi() * ctx.pi() * to_real(k0sq_moment_rational(n), ctx.bits());
    const Real rel = abs(r.value.value - exact) / exact;
    worst = max(worst, rel);
    o.values.push_back(r.value.value.to_string(ctx.target_digits()));
    if (!(rel < pow10(-40, ctx))) o.fail("n = " + std::to_string(n) + " relative error " + fmt(rel));
  }
  if (slowest >= 10) o.fail("slowest moment took " + std::to_string(slowest) + " s");
  if (o.pass) o.detail = "max rel err " + fmt(worst) + ", slowest " + std::to_string(slowest).substr(0, 5) + " s";
  return o;
}

Outcome closed_form_ikkk(const PrecisionContext& ctx) {
  Outcome o;
  MomentEngine engine(ctx);
  Real worst = ctx.zero();
  for (int l = 1; l <= 4; ++l) {
    const MomentResult& r = engine.moment({1, 3, 2 * l - 1, 0});
    const Real exact = ctx.pi() * ctx.pi() * to_real(ikkk_moment_rational(l), ctx.bits());
    const Real rel = abs(r.value.value - exact) / exact;
    worst = max(worst, rel);
    o.values.push_back(r.value.value.to_string(ctx.target_digits()));
    if (!(rel < pow10(-35, ctx))) o.fail("l = " + std::to_string(l) + " relative error " + fmt(rel));
  }
  if (o.pass) o.detail = "max rel err " + fmt(worst);
  return o;
}

Outcome vanishing(SumRuleFamily family, const std::vector<std::pair<int, int>>& cases, const PrecisionContext& ctx,
                  double budget_seconds) {
  Outcome o;
  MomentEngine engine(ctx);
  const auto t0 = Clock::now();
  Real worst = ctx.zero();
  for (const auto& [n, k] : cases) {
    const SumRuleReport r = verify_sum_rule({family, n, k}, engine);
    const Real mag = abs(r.value.value);
    worst = max(worst, mag);
    o.values.push_back(r.value.value.to_string(ctx.target_digits()));
    if (!r.pass) o.fail(r.spec.name() + " = " + fmt(r.value.value) + " exceeds its bound " + fmt(r.value.err));
    if (!(mag < pow10(-30, ctx))) o.fail(r.spec.name() + " = " + fmt(r.value.value));
  }
  const double elapsed = seconds_since(t0);
  if (elapsed >= budget_seconds) o.fail("took " + std::to_string(elapsed) + " s");
  if (o.pass)
    o.detail = std::to_string(cases.size()) + " rules, max |value| " + fmt(worst) + ", " +
               std::to_string(elapsed).substr(0, 5) + " s";
  return o;
}

Outcome crandall_numbers(const PrecisionContext& ctx) {
  Outcome o;
  for (long n = 2; n <= 20; ++n)
    if (ExactRational(crandall(n)) != crandall_explicit(n - 1)) o.fail("exact mismatch at n = " + std::to_string(n));
  MomentEngine engine(ctx);
  Real worst = ctx.zero();
  for (int n = 1; n <= 5; ++n) {
    const BoundedReal v = crandall_numeric(n, engine);
    o.values.push_back(v.value.to_string(ctx.target_digits()));
    const Real diff = abs(v.value - to_real(crandall(n), ctx.bits()));
    worst = max(worst, v.err);
    if (!(diff <= v.err)) o.fail("A(" + std::to_string(n) + ") off by " + fmt(diff) + " > bound " + fmt(v.err));
    if (!(v.err < pow10(-25, ctx))) o.fail("A(" + std::to_string(n) + ") bound " + fmt(v.err));
  }
  if (o.pass) o.detail = "exact n = 2..20, numeric n = 1..5, max bound " + fmt(worst);
  return o;
}

Outcome hilbert_spot_checks(const PrecisionContext& ctx) {
  Outcome o;
  Real worst = ctx.zero();
  const PVFunction fns[] = {PVFunction::kappa_sq,    PVFunction::iota_kappa_sgn, PVFunction::kappa_plus,
                            PVFunction::kappa_minus, PVFunction::iota_plus,      PVFunction::iota_minus};
  for (PVFunction f : fns)
    for (const char* xs : {"0.5", "1", "2", "5"}) {
      const Real x = ctx.make(std::string(xs));
      const BoundedReal pv = hilbert_pv({f, x}, ctx);
      const BoundedReal image = hilbert_image(f, x, ctx);
      const Real dev = abs(pv.value - image.value);
      worst = max(worst, dev);
      o.values.push_back(pv.value.to_string(ctx.target_digits()));
      if (!(dev < pow10(-20, ctx)))
        o.fail(std::string(to_string(f)) + " at x = " + xs + " deviates by " + fmt(dev));
    }
  if (o.pass) o.detail = "24 points, max deviation " + fmt(worst);
  return o;
}

Outcome rogers(const PrecisionContext& ctx) {
  Outcome o;
  const BoundedReal a = rogers_check(parse_rational("1/16"), 120, ctx);
  const BoundedReal b = rogers_check(parse_rational("1/10"), 150, ctx);
  o.values = {a.value.to_string(ctx.target_digits()), b.value.to_string(ctx.target_digits())};
  if (!(a.value < pow10(-30, ctx))) o.fail("u = 1/16 gives " + fmt(a.value));
  if (!(b.value < pow10(-30, ctx))) o.fail("u = 1/10 gives " + fmt(b.value));
  if (o.pass) o.detail = "|diff| " + fmt(a.value) + " and " + fmt(b.value);
  return o;
}

Outcome exact_suites() {
  Outcome o;
  const auto t0 = Clock::now();
  for (int l = 1; l < 12; ++l)
    for (int m = 1; l + m <= 12; ++m)
      if (!ladder_product_check(l, m)) o.fail("ladder identity fails at " + std::to_string(l) + "," + std::to_string(m));
  // alpha throws ConsistencyError when 4^{l-1} does not divide ((l-1)!)^2 D_{l-1}.
  for (long l = 1; l <= 200; ++l)
    if (alpha(l) <= 0) o.fail("alpha_" + std::to_string(l) + " not positive");
  for (long m = 1; m <= 10; ++m)
    for (long n = 1; n <= 10; ++n) {
      const ExactRational scaled = beta_m(m, n) * ExactRational(ExactInteger(1) << (2 * (n - 1)));
      if (scaled.get_den() != 1) o.fail("beta denominator at m = " + std::to_string(m) + ", n = " + std::to_string(n));
    }
  for (long M = 1; M <= 6; ++M)
    for (long n = 1; n <= 8; ++n)
      if (broadhurst_roberts(M, n) <= 0) o.fail("BR not positive at M = " + std::to_string(M));
  const double elapsed = seconds_since(t0);
  if (elapsed >= 60) o.fail("took " + std::to_string(elapsed) + " s");
  if (o.pass) o.detail = std::to_string(elapsed).substr(0, 5) + " s";
  return o;
}

const std::vector<std::pair<int, int>> kZ = {{2, 1}, {3, 1}, {4, 1}, {4, 2}, {5, 1}, {5, 2}, {6, 1}};
const std::vector<std::pair<int, int>> kY = {{3, 1}, {4, 1}, {5, 1}, {5, 2}, {6, 1}};

std::vector<std::function<Outcome()>> numeric_criteria(const PrecisionContext& ctx) {
  return {[&] { return closed_form_k0sq(ctx); },
          [&] { return closed_form_ikkk(ctx); },
          [&] { return vanishing(SumRuleFamily::Z, kZ, ctx, 15 * 60); },
          [&] { return vanishing(SumRuleFamily::Y, kY, ctx, 15 * 60); },
          [&] { return crandall_numbers(ctx); },
          [&] { return hilbert_spot_checks(ctx); },
          [&] { return rogers(ctx); }};
}

Outcome guarded(const std::function<Outcome()>& f) {
  try {
    return f();
  } catch (const Error& e) {
    Outcome o;
    o.fail(std::string("exception: ") + e.what());
    return o;
  }
}

void report(int id, const Outcome& o, bool& all) {
  std::printf("criterion %d: %s (%s)\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str());
  std::fflush(stdout);
  all = all && o.pass;
}

}  // namespace

int main() {
  const PrecisionContext ctx(50);
  bool all = true;

  const auto criteria = numeric_criteria(ctx);
  std::vector<Outcome> first;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    first.push_back(guarded(criteria[i]));
    report(static_cast<int>(i + 1), first.back(), all);
  }
  report(8, guarded(exact_suites), all);

  // Fresh engines, same inputs: every decimal string must repeat exactly.
  Outcome det;
  std::size_t compared = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Outcome again = guarded(criteria[i]);
    if (again.values != first[i].values || first[i].values.empty())
      det.fail("criterion " + std::to_string(i + 1) + " changed between runs");
    compared += again.values.size();
  }
  if (det.pass) det.detail = std::to_string(compared) + " values identical across two runs";
  report(9, det, all);
  return all ? 0 : 1;
}
