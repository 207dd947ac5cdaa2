#include "besselmoments/ladder.hpp"

#include "besselmoments/errors.hpp"
#include "besselmoments/exact_seq.hpp"

namespace bm {

namespace {

void drop_zeros(BivariatePoly& p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
}

}  // namespace

LadderPoly ladder(LadderKind kind, int ell) {
  if (ell < 1) throw InvalidSpecError("Hilbert ladders are indexed from 1");
  LadderPoly p{kind, ell, {}};
  if (kind == LadderKind::zeta) {
    for (int m = 0; 2 * m <= ell; ++m) {
      ExactInteger c = binomial(ell, 2 * m);
      if (m % 2 == 1) c = -c;
      p.terms.push_back({c, ell - 2 * m, ell + 2 * m});
    }
  } else {
    for (int m = 1; 2 * m - 1 <= ell; ++m) {
      ExactInteger c = binomial(ell, 2 * m - 1);
      if (m % 2 == 1) c = -c;
      p.terms.push_back({c, ell - 2 * m + 1, ell + 2 * m - 1});
    }
  }
  return p;
}

BivariatePoly to_poly(const LadderPoly& p) {
  BivariatePoly r;
  for (const LadderTerm& t : p.terms) r[{t.iota_pow, t.kappa_pow}] += t.coeff;
  drop_zeros(r);
  return r;
}

BivariatePoly operator*(const BivariatePoly& p, const BivariatePoly& q) {
  BivariatePoly r;
  for (const auto& [ea, ca] : p)
    for (const auto& [eb, cb] : q) r[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  drop_zeros(r);
  return r;
}

BivariatePoly operator+(const BivariatePoly& p, const BivariatePoly& q) {
  BivariatePoly r = p;
  for (const auto& [e, c] : q) r[e] += c;
  drop_zeros(r);
  return r;
}

BivariatePoly operator-(const BivariatePoly& p, const BivariatePoly& q) {
  BivariatePoly r = p;
  for (const auto& [e, c] : q) r[e] -= c;
  drop_zeros(r);
  return r;
}

bool ladder_product_check(int ell, int m) {
  const BivariatePoly zl = to_poly(ladder(LadderKind::zeta, ell));
  const BivariatePoly el = to_poly(ladder(LadderKind::eta, ell));
  const BivariatePoly zm = to_poly(ladder(LadderKind::zeta, m));
  const BivariatePoly em = to_poly(ladder(LadderKind::eta, m));
  const bool zeta_ok = zl * zm - el * em == to_poly(ladder(LadderKind::zeta, ell + m));
  const bool eta_ok = zl * em + el * zm == to_poly(ladder(LadderKind::eta, ell + m));
  return zeta_ok && eta_ok;
}

std::string to_string(const LadderPoly& p) {
  std::string out = p.kind == LadderKind::zeta ? "zeta_" : "eta_";
  out += std::to_string(p.ell) + " =";
  bool first = true;
  for (const LadderTerm& t : p.terms) {
    const bool negative = t.coeff < 0;
    out += first ? (negative ? " -" : " ") : (negative ? " - " : " + ");
    first = false;
    const ExactInteger mag = abs(t.coeff);
    if (mag != 1) out += mag.get_str() + "*";
    if (t.iota_pow > 0) out += "(iota*sgn)^" + std::to_string(t.iota_pow) + "*";
    out += "kappa^" + std::to_string(t.kappa_pow);
  }
  return out;
}

}  // namespace bm
