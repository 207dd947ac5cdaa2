// Python bindings. Values cross the boundary as decimal strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "besselmoments/errors.hpp"
#include "besselmoments/exact_seq.hpp"
#include "besselmoments/hilbert.hpp"
#include "besselmoments/ladder.hpp"
#include "besselmoments/moment.hpp"
#include "besselmoments/sum_rules.hpp"

namespace py = pybind11;
using namespace bm;

namespace {

struct Numeric {
  std::string value;
  std::string error_bound;
  int digits;
  std::optional<bool> passed;
  std::optional<std::string> reference;  // exact or analytic value compared against
};

Numeric numeric(const BoundedReal& r, const PrecisionContext& ctx) {
  return {r.value.to_string(ctx.target_digits()), r.err.to_string(3, MPFR_RNDU), ctx.target_digits(), {}, {}};
}

PrecisionContext context(int digits, int max_level) {
  if (digits < 5 || digits > 2000) throw InvalidSpecError("digits must lie in [5, 2000]");
  if (max_level < 3 || max_level > 20) throw InvalidSpecError("max_level must lie in [3, 20]");
  return PrecisionContext(digits, PrecisionContext::kDefaultGuard, max_level);
}

SumRuleFamily family(const std::string& f) {
  if (f == "Z" || f == "z") return SumRuleFamily::Z;
  if (f == "Y" || f == "y") return SumRuleFamily::Y;
  throw InvalidSpecError("family must be 'Z' or 'Y'");
}

LadderKind ladder_kind(const std::string& k) {
  if (k == "zeta") return LadderKind::zeta;
  if (k == "eta") return LadderKind::eta;
  throw InvalidSpecError("ladder kind must be 'zeta' or 'eta'");
}

Real parse_x(const std::string& x, const PrecisionContext& ctx) {
  if (x.find('/') != std::string::npos) return to_real(parse_rational(x), ctx.bits());
  try {
    return ctx.make(x);
  } catch (const std::exception&) {
    throw InvalidSpecError("not a number: '" + x + "'");
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Arbitrary-precision Bessel moments, sum rules and exact sequences";

  auto base = py::register_exception<Error>(m, "BesselMomentsError", PyExc_RuntimeError);
  py::register_exception<InvalidSpecError>(m, "InvalidSpecError", base.ptr());
  py::register_exception<DivergenceError>(m, "DivergenceError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<PrecisionError>(m, "PrecisionError", base.ptr());
  py::register_exception<OverflowError>(m, "OverflowError", base.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", base.ptr());

  py::class_<Numeric>(m, "Numeric")
      .def_readonly("value", &Numeric::value)
      .def_readonly("error_bound", &Numeric::error_bound)
      .def_readonly("digits", &Numeric::digits)
      .def_readonly("passed", &Numeric::passed)
      .def_readonly("reference", &Numeric::reference)
      .def("__repr__", [](const Numeric& n) {
        std::string s = "Numeric(value='" + n.value + "', error_bound='" + n.error_bound + "'";
        if (n.passed) s += std::string(", passed=") + (*n.passed ? "True" : "False");
        return s + ")";
      });

  m.def(
      "moment",
      [](int a, int b, int c, int pi_power, int digits, int max_level) {
        const PrecisionContext ctx = context(digits, max_level);
        return numeric(moment({a, b, c, pi_power}, ctx).value, ctx);
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("pi_power") = 0, py::arg("digits") = 50,
      py::arg("max_level") = 12, py::call_guard<py::gil_scoped_release>(),
      "pi^pi_power * int_0^inf I0^a K0^b t^c dt");

  m.def(
      "verify_sum_rule",
      [](const std::string& f, int n, int k, int digits, bool fused, int max_level) {
        const PrecisionContext ctx = context(digits, max_level);
        const SumRuleReport r = verify_sum_rule({family(f), n, k}, ctx, fused);
        Numeric out = numeric(r.value, ctx);
        out.passed = r.pass;
        out.reference = "0";
        return out;
      },
      py::arg("family"), py::arg("n"), py::arg("k"), py::arg("digits") = 50, py::arg("fused") = false,
      py::arg("max_level") = 12, py::call_guard<py::gil_scoped_release>());

  m.def(
      "sum_rule_terms",
      [](const std::string& f, int n, int k) {
        std::vector<std::tuple<std::string, int, int, int, int>> out;
        for (const SumRuleTerm& t : sum_rule_terms({family(f), n, k}))
          out.emplace_back(t.coeff.get_str(), t.spec.a, t.spec.b, t.spec.c, t.spec.pi_power);
        return out;
      },
      py::arg("family"), py::arg("n"), py::arg("k"));

  m.def(
      "crandall_numeric",
      [](int n, int digits, bool fused) {
        const PrecisionContext ctx = context(digits, PrecisionContext::kDefaultMaxLevel);
        const BoundedReal v = crandall_numeric(n, ctx, fused);
        Numeric out = numeric(v, ctx);
        const ExactInteger exact = crandall(n);
        out.reference = to_string(exact);
        out.passed = abs(v.value - to_real(exact, ctx.bits())) <= v.err;
        return out;
      },
      py::arg("n"), py::arg("digits") = 50, py::arg("fused") = false, py::call_guard<py::gil_scoped_release>());

  m.def(
      "alpha_beta_numeric",
      [](int M, int n, int digits) {
        const PrecisionContext ctx = context(digits, PrecisionContext::kDefaultMaxLevel);
        return numeric(alpha_beta_numeric(M, n, ctx), ctx);
      },
      py::arg("M"), py::arg("n"), py::arg("digits") = 50, py::call_guard<py::gil_scoped_release>());

  m.def(
      "hilbert_pv",
      [](const std::string& fn, const std::string& x, int digits) {
        const PrecisionContext ctx = context(digits, PrecisionContext::kDefaultMaxLevel);
        const PVFunction f = parse_pv_function(fn);
        const Real xr = parse_x(x, ctx);
        const BoundedReal pv = hilbert_pv({f, xr}, ctx);
        const BoundedReal image = hilbert_image(f, xr, ctx);
        Numeric out = numeric(pv, ctx);
        out.reference = image.value.to_string(ctx.target_digits());
        out.passed = pv.overlaps(image);
        return out;
      },
      py::arg("function"), py::arg("x"), py::arg("digits") = 50, py::call_guard<py::gil_scoped_release>());

  m.def(
      "rogers_check",
      [](const std::string& u, long N, int digits) {
        const PrecisionContext ctx = context(digits, PrecisionContext::kDefaultMaxLevel);
        const BoundedReal r = rogers_check(parse_rational(u), N, ctx);
        Numeric out = numeric(r, ctx);
        out.passed = r.value <= r.err;
        return out;
      },
      py::arg("u"), py::arg("N"), py::arg("digits") = 50, py::call_guard<py::gil_scoped_release>());

  // Exact values as decimal strings; the package wraps them in int / Fraction.
  m.def("domb", [](long n) { return to_string(domb(n)); }, py::arg("n"));
  m.def("alpha", [](long l) { return to_string(alpha(l)); }, py::arg("ell"));
  m.def("alpha_m", [](long mm, long n) { return to_string(alpha_m(mm, n)); }, py::arg("m"), py::arg("n"));
  m.def("crandall", [](long n) { return to_string(crandall(n)); }, py::arg("n"));
  m.def("beta_m", [](long mm, long n) { return to_string(beta_m(mm, n)); }, py::arg("m"), py::arg("n"));
  m.def("broadhurst_roberts", [](long M, long n) { return to_string(broadhurst_roberts(M, n)); }, py::arg("M"),
        py::arg("n"));

  m.def(
      "ladder",
      [](const std::string& kind, int ell) {
        std::vector<std::tuple<std::string, int, int>> out;
        for (const LadderTerm& t : ladder(ladder_kind(kind), ell).terms)
          out.emplace_back(t.coeff.get_str(), t.iota_pow, t.kappa_pow);
        return out;
      },
      py::arg("kind"), py::arg("ell"));
  m.def("ladder_product_check", &ladder_product_check, py::arg("ell"), py::arg("m"));
}
