#include "besselmoments/exact.hpp"

#include <regex>

#include "besselmoments/errors.hpp"

namespace bm {

ExactRational make_rational(const ExactInteger& num, const ExactInteger& den) {
  if (den == 0) throw InvalidSpecError("zero denominator");
  ExactRational r(num, den);
  r.canonicalize();
  return r;
}

Real to_real(const ExactInteger& x, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_z(r.get(), x.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real to_real(const ExactRational& x, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_q(r.get(), x.get_mpq_t(), MPFR_RNDN);
  return r;
}

std::string to_string(const ExactRational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const ExactInteger& x) { return x.get_str(); }

ExactRational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw InvalidSpecError("not a rational number: '" + text + "'");
  const ExactInteger num(m[1].str());
  const ExactInteger den(m[2].matched ? m[2].str() : std::string("1"));
  return make_rational(num, den);
}

}  // namespace bm
