#include "hdepth/power_theorem.hpp"

#include <stdexcept>

namespace hdepth {

namespace {

BigInt sign(std::int64_t exponent) { return exponent % 2 == 0 ? 1 : -1; }

void require_positive(std::int64_t n, std::int64_t s, std::int64_t r, std::int64_t k) {
  if (n < 1 || s < 1 || r < 1 || k < 1) throw std::invalid_argument("lemma4: n, s, r, k must be positive");
}

void require_tail_index(std::int64_t n, std::int64_t r, std::int64_t k) {
  if (n + k - r - 1 < 0) throw std::domain_error("lemma4: n + k - r - 1 < 0");
}

// sum_{j=0}^{s-1} (-1)^j C(r, k-j) C(n+j-1, j)
BigInt head_sum(std::int64_t n, std::int64_t s, std::int64_t r, std::int64_t k) {
  BigInt sum = 0;
  for (std::int64_t j = 0; j < s; ++j) sum += sign(j) * binomial(r, k - j) * binomial(n + j - 1, j);
  return sum;
}

}  // namespace

ExpansionParams::ExpansionParams(std::int64_t n_, std::int64_t s_, std::int64_t r_, std::int64_t k_)
    : n(n_), s(s_), r(r_), k(k_) {
  if (s < 1 || !(0 < r && r < n) || k < 0) {
    throw std::invalid_argument("ExpansionParams: need s >= 1, 0 < r < n, k >= 0");
  }
}

BigInt expanded_coefficient(const ExpansionParams& p) {
  const auto [n, s, r, k] = p;
  if (k < s) return 0;
  if (k == s) return binomial(n + s - 1, s);
  const BigInt tail = binomial(n + k - 1 - r, k);
  if (k >= r + s) return tail;
  return tail + sign(k - 1) * head_sum(n, s, r, k);
}

BigInt expanded_coefficient_oracle(const ExpansionParams& p) {
  const PowerIdealParams ideal(p.n, p.s);
  BigInt sum = 0;
  for (std::int64_t i = 0; i <= std::min(p.r, p.k); ++i) {
    sum += sign(i) * binomial(p.r, i) * power_ideal_coefficient(ideal, p.k - i);
  }
  return sum;
}

BigInt lemma4_lhs(std::int64_t n, std::int64_t s, std::int64_t r, std::int64_t k) {
  require_positive(n, s, r, k);
  BigInt sum = 0;
  for (std::int64_t j = s; j <= k; ++j) sum += sign(k - j) * binomial(n + j - 1, j) * binomial(r, k - j);
  return sum;
}

BigInt lemma4_rhs8(std::int64_t n, std::int64_t s, std::int64_t r, std::int64_t k) {
  require_positive(n, s, r, k);
  require_tail_index(n, r, k);
  return binomial(n + k - r - 1, k) + sign(k - 1) * head_sum(n, s, r, k);
}

BigInt lemma4_rhs9(std::int64_t n, std::int64_t s, std::int64_t r, std::int64_t k) {
  require_positive(n, s, r, k);
  require_tail_index(n, r, k);
  BigInt sum = 0;
  for (std::int64_t t = 1; t <= r; ++t) {
    BigInt first = binomial(r - t, k - s);
    // n - t + s - 1 can only go negative where the first factor vanishes.
    if (sgn(first) == 0) continue;
    sum += first * binomial(n - t + s - 1, s - 1);
  }
  return binomial(n + k - r - 1, k) + sign(k + s) * sum;
}

std::int64_t hdepth_power_closed_form(const PowerIdealParams& p) { return (p.n + p.s) / (p.s + 1); }

BigInt upper_bound_coefficient(const PowerIdealParams& p, std::int64_t q) {
  if (q < 0) throw std::invalid_argument("upper_bound_coefficient: q must be nonnegative");
  return binomial(p.n + p.s, p.s + 1) - q * binomial(p.n + p.s - 1, p.s);
}

}  // namespace hdepth
