#pragma once

// Cancellation-free hyperbolic forms for x > 0. Every expression is written
// through expm1/log1p so that both the x -> 0 and x -> inf ends keep full
// relative precision without branching.

#include <cmath>

namespace zpe::detail {

/// coth(x) - 1 = 2 / (e^{2x} - 1)
inline double coth_minus_one(double x) { return 2.0 / std::expm1(2.0 * x); }

inline double coth(double x) { return 1.0 + coth_minus_one(x); }

/// csch^2(x) = 4 e^{-2x} / (1 - e^{-2x})^2
inline double csch_squared(double x) {
  const double d = std::expm1(-2.0 * x);
  return 4.0 * std::exp(-2.0 * x) / (d * d);
}

/// ln(2 sinh x) = x + ln(1 - e^{-2x})
inline double log_two_sinh(double x) { return x + std::log(-std::expm1(-2.0 * x)); }

/// sinh(2x)/2 - sinh^2(x) = (1 - e^{-2x}) / 2
inline double half_sinh2_minus_sinh_sq(double x) { return -0.5 * std::expm1(-2.0 * x); }

}  // namespace zpe::detail
