#include "besselmoments/moment_spec.hpp"

#include "besselmoments/errors.hpp"

namespace bm {

bool MomentSpec::convergent() const noexcept {
  if (a < 0 || b < 0 || c < 0) return false;
  if (a < b) return true;
  // I0 K0 ~ 1/(2t): the integrand decays like t^{c-a} when a == b.
  return a == b && c <= a - 2;
}

void MomentSpec::validate() const {
  if (a < 0 || b < 0 || c < 0) throw InvalidSpecError("moment exponents must be non-negative: " + to_string());
  if (!convergent())
    throw DivergenceError("IKM(" + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(c) +
                          ") diverges: need a < b, or a == b with c <= a - 2");
}

std::string MomentSpec::to_string() const {
  std::string s = "IKM(" + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(c) + ")";
  if (pi_power != 0) s = "pi^" + std::to_string(pi_power) + "*" + s;
  return s;
}

}  // namespace bm
