#include "hdepth/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hdepth {

namespace {

constexpr double kShiftThreshold = 10.0;

void require_positive(double x, const char* name) {
  if (!(x > 0.0)) throw std::domain_error(std::string(name) + ": argument must be positive, got " + std::to_string(x));
}

}  // namespace

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  // Accumulate the product and take one log; the product stays well below
  // overflow for at most ten factors of size <= 10.
  double product = 1.0;
  while (x < kShiftThreshold) {
    product *= x;
    x += 1.0;
  }
  const double shift = std::log(product);
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // B_{2k} / (2k (2k-1) x^(2k-1)), k = 1..6
  const double series =
      inv * (1.0 / 12 +
             inv2 * (-1.0 / 360 +
                     inv2 * (1.0 / 1260 + inv2 * (-1.0 / 1680 + inv2 * (1.0 / 1188 + inv2 * (-691.0 / 360360))))));
  return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + series - shift;
}

double digamma(double x) {
  require_positive(x, "digamma");
  double shift = 0.0;
  while (x < kShiftThreshold) {
    shift += 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  // B_{2k} / (2k x^(2k)), k = 1..6
  const double series =
      inv2 * (1.0 / 12 -
              inv2 * (1.0 / 120 -
                      inv2 * (1.0 / 252 - inv2 * (1.0 / 240 - inv2 * (1.0 / 132 - inv2 * (691.0 / 32760))))));
  return std::log(x) - 0.5 / x - series - shift;
}

}  // namespace hdepth
