#include "besselmoments/precision.hpp"

#include "besselmoments/errors.hpp"

namespace bm {

ConstantCache::ConstantCache(mpfr_prec_t bits)
    : pi(const_pi(bits)), euler(const_euler(bits)), ln10(const_log10(bits)), ln2(bits) {
  mpfr_const_log2(ln2.get(), MPFR_RNDN);
}

PrecisionContext::PrecisionContext(int target_digits, int guard_digits, int max_level)
    : target_digits_(target_digits), guard_digits_(guard_digits), max_level_(max_level) {
  if (target_digits_ < 10) throw DomainError("target_digits must be at least 10");
  if (guard_digits_ < 1) throw DomainError("guard_digits must be positive");
  if (max_level_ < 3 || max_level_ > 20) throw DomainError("max_level must lie in [3, 20]");
  bits_ = digits_to_bits(working_digits());
  constants_ = std::make_shared<const ConstantCache>(bits_);
}

PrecisionContext PrecisionContext::with_guard(int guard_digits) const {
  return PrecisionContext(target_digits_, guard_digits, max_level_);
}

PrecisionContext PrecisionContext::with_max_level(int max_level) const {
  PrecisionContext copy = *this;
  if (max_level < 3 || max_level > 20) throw DomainError("max_level must lie in [3, 20]");
  copy.max_level_ = max_level;
  return copy;
}

Real PrecisionContext::target_epsilon() const { return pow10(-target_digits_, bits_); }

Real PrecisionContext::working_epsilon() const { return pow10(-working_digits(), bits_); }

Real PrecisionContext::ulp() const { return unit_roundoff(bits_); }

}  // namespace bm
