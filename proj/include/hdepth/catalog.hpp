#pragma once

// Closed-form Hilbert series and functions for powers of the maximal ideal
// of K[X_1..X_n] and for the syzygy modules of K[X_1..X_n]/(X_1..X_r).

#include "hdepth/series.hpp"

namespace hdepth {

struct PowerIdealParams {
  std::int64_t n;  // number of variables
  std::int64_t s;  // power of the maximal ideal

  PowerIdealParams(std::int64_t n, std::int64_t s);
};

// u-th syzygy of R/(X_1..X_r) in degree k, with 1 <= u <= r <= n and k >= 0.
struct SyzygyParams {
  std::int64_t n;
  std::int64_t r;
  std::int64_t u;
  std::int64_t k;

  SyzygyParams(std::int64_t n, std::int64_t r, std::int64_t u, std::int64_t k);
};

// Q / (1 - T)^n with Q = 1 - (1 - T)^n sum_{k<s} C(n+k-1, k) T^k.
RationalSeries power_ideal_series(const PowerIdealParams& p);

// Hilbert function of the s-th power: C(n+k-1, k) for k >= s, else 0.
BigInt power_ideal_coefficient(const PowerIdealParams& p, std::int64_t k);

// Three formulas for the same Hilbert function value: from the resolution
// truncated on the right, on the left, and the closed sum over t.
BigInt syzygy_hilbert_right(const SyzygyParams& p);
BigInt syzygy_hilbert_left(const SyzygyParams& p);
BigInt syzygy_hilbert_closed(const SyzygyParams& p);

// Links the syzygy degree data to the power in the binomial identities:
// s = k - u + 1.
constexpr std::int64_t syzygy_power_index(std::int64_t k, std::int64_t u) { return k - u + 1; }

}  // namespace hdepth
