#include "hdepth/series.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace hdepth {

RationalSeries::RationalSeries(LaurentPolynomial numerator, std::int64_t denom_exponent)
    : numerator_(std::move(numerator)), denom_exponent_(denom_exponent) {
  if (denom_exponent_ < 0) throw std::invalid_argument("RationalSeries: negative denominator exponent");
}

BigInt SeriesPrefix::coefficient(Degree k) const {
  if (k < offset || k > truncation_degree()) return 0;
  return coeffs[static_cast<std::size_t>(k - offset)];
}

namespace {

// Replaces v by its running sums, in place.
void prefix_sum(std::vector<BigInt>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) v[i] += v[i - 1];
}

std::vector<BigInt> window(const LaurentPolynomial& p, Degree lo, Degree hi) {
  std::vector<BigInt> v(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const Degree k = p.offset() + static_cast<Degree>(i);
    if (k >= lo && k <= hi) v[static_cast<std::size_t>(k - lo)] = p.coeffs()[i];
  }
  return v;
}

// Monomial-basis coefficients of sum_i newton[i] * C(t, i).
std::vector<mpq_class> newton_to_monomial(const std::vector<BigInt>& newton) {
  std::vector<mpq_class> out(newton.size());
  // falling[j] = coefficient of t^j in t (t-1) ... (t-i+1)
  std::vector<BigInt> falling{1};
  BigInt factorial = 1;
  for (std::size_t i = 0; i < newton.size(); ++i) {
    if (i > 0) {
      factorial *= static_cast<unsigned long>(i);
      std::vector<BigInt> next(falling.size() + 1);
      const BigInt shift = static_cast<unsigned long>(i - 1);
      for (std::size_t j = 0; j < falling.size(); ++j) {
        next[j + 1] += falling[j];
        next[j] -= shift * falling[j];
      }
      falling = std::move(next);
    }
    if (sgn(newton[i]) == 0) continue;
    for (std::size_t j = 0; j < falling.size(); ++j) {
      mpq_class term(newton[i] * falling[j], factorial);
      term.canonicalize();
      out[j] += term;
    }
  }
  return out;
}

// Cauchy bound 1 + max |a_j / a_d| on the real roots of a nonzero polynomial,
// rounded up and clamped to the Degree range.
Degree cauchy_bound(const std::vector<mpq_class>& monomial) {
  std::size_t d = monomial.size();
  while (d > 0 && sgn(monomial[d - 1]) == 0) --d;
  if (d <= 1) return 0;
  const mpq_class& lead = monomial[d - 1];
  mpq_class best = 0;
  for (std::size_t j = 0; j + 1 < d; ++j) {
    mpq_class ratio = abs(monomial[j] / lead);
    if (ratio > best) best = ratio;
  }
  mpq_class bound = best + 1;
  BigInt ceil_bound;
  mpz_cdiv_q(ceil_bound.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  if (!ceil_bound.fits_slong_p()) return std::numeric_limits<Degree>::max() / 2;
  return ceil_bound.get_si();
}

}  // namespace

SeriesPrefix expand(const RationalSeries& rs, Degree max_degree) {
  const LaurentPolynomial& q = rs.numerator();
  const Degree lo = q.offset();
  if (max_degree < lo) throw std::invalid_argument("expand: truncation degree below the numerator's offset");
  SeriesPrefix out{lo, window(q, lo, max_degree)};
  for (std::int64_t j = 0; j < rs.denom_exponent(); ++j) prefix_sum(out.coeffs);
  return out;
}

PositivityCertificate PositivityCertificate::positive(Degree tail_bound) {
  return PositivityCertificate(Verdict::Positive, tail_bound, 0);
}

PositivityCertificate PositivityCertificate::negative_at(Degree degree, BigInt value) {
  if (sgn(value) >= 0) throw std::logic_error("negative_at: witness value must be negative");
  return PositivityCertificate(Verdict::NegativeAt, degree, std::move(value));
}

Degree PositivityCertificate::witness_degree() const {
  if (is_positive()) throw std::logic_error("positive certificate has no witness");
  return degree_;
}

const BigInt& PositivityCertificate::witness_value() const {
  if (is_positive()) throw std::logic_error("positive certificate has no witness");
  return value_;
}

Degree PositivityCertificate::tail_bound() const {
  if (!is_positive()) throw std::logic_error("negative certificate has no tail bound");
  return degree_;
}

PositivityCertificate check_positivity(const RationalSeries& rs) {
  const LaurentPolynomial& q = rs.numerator();
  if (q.is_zero()) return PositivityCertificate::positive(0);

  const std::int64_t m = rs.denom_exponent();
  const Degree lo = q.offset();
  const Degree top = q.top_degree();

  // levels[j] after j prefix sums; newton[i] = level (m - i) at top + i.
  std::vector<BigInt> c = window(q, lo, top + m);
  std::vector<BigInt> newton(static_cast<std::size_t>(m));
  for (std::int64_t j = 1; j <= m; ++j) {
    prefix_sum(c);
    newton[static_cast<std::size_t>(m - j)] = c[static_cast<std::size_t>(top + m - j - lo)];
  }

  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) < 0) return PositivityCertificate::negative_at(lo + static_cast<Degree>(i), c[i]);
  }
  if (m == 0) return PositivityCertificate::positive(top);

  auto all_nonnegative = [](const std::vector<BigInt>& v) {
    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return sgn(x) >= 0; });
  };
  if (all_nonnegative(newton)) return PositivityCertificate::positive(top);

  const Degree bound = cauchy_bound(newton_to_monomial(newton));
  // newton holds the forward differences of f at t; f(t) = newton[0].
  for (Degree t = 0;; ++t) {
    if (sgn(newton[0]) < 0) return PositivityCertificate::negative_at(top + t, newton[0]);
    if (t > bound || all_nonnegative(newton)) return PositivityCertificate::positive(top + t);
    for (std::size_t i = 0; i + 1 < newton.size(); ++i) newton[i] += newton[i + 1];
  }
}

}  // namespace hdepth
