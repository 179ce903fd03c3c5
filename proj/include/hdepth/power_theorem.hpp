#pragma once

// Coefficients of (1 - T)^r H(T) for H the Hilbert series of the s-th power
// of the maximal ideal, the binomial identities rewriting its critical middle
// range, and the resulting closed form ceil(n / (s + 1)) for the Hilbert
// depth.

#include "hdepth/catalog.hpp"

namespace hdepth {

struct ExpansionParams {
  std::int64_t n;
  std::int64_t s;
  std::int64_t r;  // 0 < r < n
  std::int64_t k;  // degree, >= 0

  ExpansionParams(std::int64_t n, std::int64_t s, std::int64_t r, std::int64_t k);
};

// Coefficient of T^k, piecewise in k:
//   k < s            0
//   k = s            C(n+s-1, s)
//   s < k < r + s    C(n+k-1-r, k) + (-1)^(k-1) sum_{j<s} (-1)^j C(r, k-j) C(n+j-1, j)
//   k >= r + s       C(n+k-1-r, k)
BigInt expanded_coefficient(const ExpansionParams& p);

// Same coefficient by direct convolution of (1 - T)^r with the Hilbert
// function: sum_i (-1)^i C(r, i) H(k - i).
BigInt expanded_coefficient_oracle(const ExpansionParams& p);

// The three sides of the identity
//   sum_{j=s}^{k} (-1)^(k-j) C(n+j-1, j) C(r, k-j)
//     = C(n+k-r-1, k) + (-1)^(k-1) sum_{j=0}^{s-1} (-1)^j C(r, k-j) C(n+j-1, j)
//     = C(n+k-r-1, k) + (-1)^(k+s) sum_{t=1}^{r} C(r-t, k-s) C(n-t+s-1, s-1)
// for positive n, s, r, k. The last equality needs k >= s: below that the
// t-sum is empty and the third form is C(n+k-r-1, k) while the others are 0.
// The two right-hand forms throw std::domain_error when n + k - r - 1 < 0.
BigInt lemma4_lhs(std::int64_t n, std::int64_t s, std::int64_t r, std::int64_t k);
BigInt lemma4_rhs8(std::int64_t n, std::int64_t s, std::int64_t r, std::int64_t k);
BigInt lemma4_rhs9(std::int64_t n, std::int64_t s, std::int64_t r, std::int64_t k);

// ceil(n / (s + 1)).
std::int64_t hdepth_power_closed_form(const PowerIdealParams& p);

// Coefficient of T^(s+1) in (1 - T)^q H(T): C(n+s, s+1) - q C(n+s-1, s).
// Negative exactly when q > ceil(n / (s + 1)).
BigInt upper_bound_coefficient(const PowerIdealParams& p, std::int64_t q);

}  // namespace hdepth
