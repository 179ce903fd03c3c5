#pragma once

namespace hdepth {

// ln Gamma(x) for x > 0: shift upward until x >= 10, then the Stirling
// series through x^-11. Throws std::domain_error for x <= 0 or NaN.
double log_gamma(double x);

// psi(x) = Gamma'(x) / Gamma(x) for x > 0: psi(x) = psi(x + 1) - 1/x until
// x >= 10, then the asymptotic series through x^-12. Absolute error below
// 1e-12 on (0, inf).
double digamma(double x);

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

}  // namespace hdepth
