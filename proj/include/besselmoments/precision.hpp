#pragma once

#include <memory>

#include "besselmoments/real.hpp"

namespace bm {

// Constants shared by every evaluation at one working precision.
struct ConstantCache {
  explicit ConstantCache(mpfr_prec_t bits);
  Real pi;
  Real euler;
  Real ln10;
  Real ln2;
};

/// Working-precision policy for all floating computation.
///
/// Working precision is target_digits + guard_digits decimal digits. Constants
/// are computed once at construction and shared read-only between copies, so a
/// context may be used from several threads at once.
class PrecisionContext {
 public:
  static constexpr int kDefaultDigits = 50;
  static constexpr int kDefaultGuard = 15;
  static constexpr int kDefaultMaxLevel = 12;

  explicit PrecisionContext(int target_digits = kDefaultDigits, int guard_digits = kDefaultGuard,
                            int max_level = kDefaultMaxLevel);

  int target_digits() const { return target_digits_; }
  int guard_digits() const { return guard_digits_; }
  int working_digits() const { return target_digits_ + guard_digits_; }
  int max_level() const { return max_level_; }
  mpfr_prec_t bits() const { return bits_; }

  // Same target, different guard digits or refinement budget.
  PrecisionContext with_guard(int guard_digits) const;
  PrecisionContext with_max_level(int max_level) const;

  const Real& pi() const { return constants_->pi; }
  const Real& euler() const { return constants_->euler; }
  const Real& ln10() const { return constants_->ln10; }
  const Real& ln2() const { return constants_->ln2; }

  // 10^-target_digits: relative accuracy requested from every operation.
  Real target_epsilon() const;
  // 10^-working_digits.
  Real working_epsilon() const;
  // Rounding bound of one operation at working precision.
  Real ulp() const;

  Real make(long v) const { return Real(v, bits_); }
  Real make(double v) const { return Real(v, bits_); }
  Real make(const std::string& decimal) const { return Real(decimal, bits_); }
  Real zero() const { return Real(0L, bits_); }

 private:
  int target_digits_;
  int guard_digits_;
  int max_level_;
  mpfr_prec_t bits_;
  std::shared_ptr<const ConstantCache> constants_;
};

}  // namespace bm
