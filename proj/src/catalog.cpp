#include "hdepth/catalog.hpp"

#include <stdexcept>

namespace hdepth {

namespace {

BigInt sign(std::int64_t exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace

PowerIdealParams::PowerIdealParams(std::int64_t n_, std::int64_t s_) : n(n_), s(s_) {
  if (n < 1 || s < 1) throw std::invalid_argument("PowerIdealParams: need n >= 1 and s >= 1");
}

SyzygyParams::SyzygyParams(std::int64_t n_, std::int64_t r_, std::int64_t u_, std::int64_t k_)
    : n(n_), r(r_), u(u_), k(k_) {
  if (!(1 <= u && u <= r && r <= n) || k < 0) {
    throw std::invalid_argument("SyzygyParams: need 1 <= u <= r <= n and k >= 0");
  }
}

RationalSeries power_ideal_series(const PowerIdealParams& p) {
  std::vector<BigInt> head(static_cast<std::size_t>(p.s));
  for (std::int64_t k = 0; k < p.s; ++k) head[static_cast<std::size_t>(k)] = binomial(p.n + k - 1, k);
  LaurentPolynomial q = LaurentPolynomial::constant(1) - mul_one_minus_t_pow(p.n, LaurentPolynomial(0, std::move(head)));
  return RationalSeries(std::move(q), p.n);
}

BigInt power_ideal_coefficient(const PowerIdealParams& p, std::int64_t k) {
  if (k < p.s) return 0;
  return binomial(p.n + k - 1, k);
}

BigInt syzygy_hilbert_right(const SyzygyParams& p) {
  // C(n-r+k-1, n-r-1) counts monomials of degree k in n - r variables; for
  // n == r that is 1 in degree 0 and nothing else.
  BigInt quotient = p.n > p.r ? binomial(p.n - p.r + p.k - 1, p.n - p.r - 1) : BigInt(p.k == 0 ? 1 : 0);
  BigInt sum = 0;
  for (std::int64_t j = p.k - p.u + 1; j <= p.k; ++j) {
    if (j < 0) continue;
    sum += sign(p.k - j) * binomial(p.r, p.k - j) * binomial(p.n + j - 1, j);
  }
  return sign(p.u) * (quotient - sum);
}

BigInt syzygy_hilbert_left(const SyzygyParams& p) {
  BigInt sum = 0;
  for (std::int64_t j = 0; j <= p.k - p.u; ++j) {
    sum += sign(j) * binomial(p.r, p.k - j) * binomial(p.n + j - 1, j);
  }
  return sign(p.k - p.u) * sum;
}

BigInt syzygy_hilbert_closed(const SyzygyParams& p) {
  if (p.k < p.u) return 0;
  BigInt sum = 0;
  for (std::int64_t t = 1; t <= p.r; ++t) {
    sum += binomial(p.r - t, p.u - 1) * binomial(p.n - t + p.k - p.u, p.k - p.u);
  }
  return sum;
}

}  // namespace hdepth
