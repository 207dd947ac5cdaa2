#pragma once

#include <string>

#include "besselmoments/bounded_real.hpp"
#include "besselmoments/precision.hpp"

namespace bm::test {

inline Real R(const std::string& s, const PrecisionContext& ctx) { return Real(s, ctx.bits()); }

inline Real pow10(long e, const PrecisionContext& ctx) { return bm::pow10(e, ctx.bits()); }

// |x.value - expected|
inline Real deviation(const BoundedReal& x, const Real& expected) { return abs(x.value - expected); }

inline Real rel_deviation(const BoundedReal& x, const Real& expected) { return abs(x.value - expected) / abs(expected); }

}  // namespace bm::test
