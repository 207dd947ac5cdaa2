#pragma once

#include <compare>
#include <string>

namespace bm {

/// Integer data of pi^pi_power * IKM(a, b; c) = pi^p * int_0^inf I0^a K0^b t^c dt.
struct MomentSpec {
  int a = 0;
  int b = 0;
  int c = 0;
  int pi_power = 0;

  // Throws InvalidSpecError for negative exponents and DivergenceError when the
  // integral diverges at infinity (a > b, or a == b with c >= a - 1).
  void validate() const;
  bool convergent() const noexcept;
  // Exponential decay rate b - a of the integrand; zero means algebraic decay.
  int decay_rate() const noexcept { return b - a; }

  std::string to_string() const;

  friend auto operator<=>(const MomentSpec&, const MomentSpec&) = default;
};

}  // namespace bm
