#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "besselmoments/exact.hpp"

namespace bm {

enum class LadderKind { zeta, eta };

struct LadderTerm {
  ExactInteger coeff;
  int iota_pow;  // power of iota * sgn
  int kappa_pow;

  bool operator==(const LadderTerm&) const = default;
};

/// zeta_l = Re z^l and eta_l = -Im z^l for z = kappa (iota sgn + i kappa), written
/// as integer polynomials in (iota sgn, kappa). Every term has total degree 2l.
struct LadderPoly {
  LadderKind kind;
  int ell;
  std::vector<LadderTerm> terms;  // ascending kappa power
};

LadderPoly ladder(LadderKind kind, int ell);

// Sparse integer polynomial in (iota sgn, kappa), keyed by (iota_pow, kappa_pow).
using BivariatePoly = std::map<std::pair<int, int>, ExactInteger>;

BivariatePoly to_poly(const LadderPoly& p);
BivariatePoly operator*(const BivariatePoly& p, const BivariatePoly& q);
BivariatePoly operator+(const BivariatePoly& p, const BivariatePoly& q);
BivariatePoly operator-(const BivariatePoly& p, const BivariatePoly& q);

// zeta_l zeta_m - eta_l eta_m == zeta_{l+m} and zeta_l eta_m + eta_l zeta_m == eta_{l+m}.
bool ladder_product_check(int ell, int m);

std::string to_string(const LadderPoly& p);

}  // namespace bm
