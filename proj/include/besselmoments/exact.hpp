#pragma once

#include <gmpxx.h>

#include <string>

#include "besselmoments/real.hpp"

namespace bm {

using ExactInteger = mpz_class;
// Always canonical (lowest terms, positive denominator) after construction via make_rational.
using ExactRational = mpq_class;

ExactRational make_rational(const ExactInteger& num, const ExactInteger& den = 1);

Real to_real(const ExactInteger& x, mpfr_prec_t bits);
Real to_real(const ExactRational& x, mpfr_prec_t bits);

// "p" for integers, "p/q" otherwise.
std::string to_string(const ExactRational& x);
std::string to_string(const ExactInteger& x);

// Parses "p", "-p" or "p/q".
ExactRational parse_rational(const std::string& text);

}  // namespace bm
