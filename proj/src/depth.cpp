#include "hdepth/depth.hpp"

#include <algorithm>
#include <limits>

namespace hdepth {

namespace {

void require_positive_input(const RationalSeries& rs) {
  if (rs.numerator().is_zero()) throw NotAHilbertSeries("zero numerator");
  const auto cert = check_positivity(rs);
  if (!cert.is_positive()) {
    throw NotAHilbertSeries("coefficient of T^" + std::to_string(cert.witness_degree()) + " is " +
                            cert.witness_value().get_str());
  }
}

// Smallest x in [lo, hi] with pred(x), given pred monotone (false...true)
// and pred(hi) true.
template <class Pred>
std::int64_t first_true(std::int64_t lo, std::int64_t hi, Pred pred) {
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (pred(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

Degree default_ceiling(const LaurentPolynomial& p, std::int64_t level) {
  BigInt max_abs = 0;
  for (const auto& c : p.coeffs()) max_abs = std::max(max_abs, BigInt(abs(c)));
  BigInt ceiling = BigInt(p.top_degree()) + 4 * BigInt(level + 1) * (1 + max_abs);
  if (!ceiling.fits_slong_p()) return std::numeric_limits<Degree>::max() / 2;
  return ceiling.get_si();
}

}  // namespace

DepthReport hdepth_via_numerator(const RationalSeries& rs) {
  require_positive_input(rs);
  const std::int64_t n = rs.denom_exponent();
  const LaurentPolynomial& q = rs.numerator();
  auto positive_at = [&](std::int64_t exponent) { return check_positivity(RationalSeries(q, exponent)).is_positive(); };

  const std::int64_t q_min = first_true(0, n, positive_at);
  DepthReport report{n - q_min, check_positivity(RationalSeries(q, q_min)), std::nullopt, std::nullopt};
  if (q_min > 0) {
    report.certificate_above_depth = check_positivity(RationalSeries(q, q_min - 1));
    if (report.certificate_above_depth->is_positive()) {
      throw InternalInconsistency("positivity is not monotone in the denominator exponent");
    }
  }
  return report;
}

std::int64_t hdepth_via_multiplication(const RationalSeries& rs) {
  require_positive_input(rs);
  const std::int64_t n = rs.denom_exponent();
  auto negative_after = [&](std::int64_t p) {
    return !check_positivity(RationalSeries(mul_one_minus_t_pow(p, rs.numerator()), n)).is_positive();
  };
  // p = 0 is positive by the input check; p = n + 1 never is since the
  // result is a nonzero polynomial with coefficient sum 0.
  return first_true(1, n + 1, negative_after) - 1;
}

HilbertDecomposition decompose(const RationalSeries& rs, const DecomposeOptions& options) {
  const std::int64_t n = rs.denom_exponent();
  const std::int64_t d = hdepth_via_numerator(rs).hdepth;
  HilbertDecomposition out{d, {}};

  LaurentPolynomial current = rs.numerator();
  for (std::int64_t i = n - d; i >= 1; --i) {
    const BigInt sigma = eval_at_one(current);
    if (sgn(sigma) < 0) {
      throw InternalInconsistency("negative leading tail coefficient at pole order " + std::to_string(i));
    }
    if (sgn(sigma) > 0) {
      const Degree ceiling = options.search_ceiling.value_or(default_ceiling(current, i));
      std::optional<LaurentPolynomial> rest;
      Degree j = current.offset();
      for (; j <= ceiling; ++j) {
        LaurentPolynomial candidate = current - LaurentPolynomial::monomial(sigma, j);
        if (check_positivity(RationalSeries(candidate, i)).is_positive()) {
          rest = std::move(candidate);
          break;
        }
      }
      if (!rest) {
        throw InternalInconsistency("no admissible monomial at pole order " + std::to_string(i) +
                                    " below degree " + std::to_string(ceiling));
      }
      out.parts.push_back({d + i, LaurentPolynomial::monomial(sigma, j)});
      current = std::move(*rest);
    }
    current = divide_by_one_minus_t(current);
  }
  if (current.is_zero() || !current.has_nonnegative_coefficients()) {
    throw InternalInconsistency("remaining numerator at the depth level is not positive");
  }
  out.parts.push_back({d, std::move(current)});
  std::reverse(out.parts.begin(), out.parts.end());
  return out;
}

bool verify_decomposition(const HilbertDecomposition& dec, const RationalSeries& rs) {
  const std::int64_t n = rs.denom_exponent();
  if (dec.parts.empty() || dec.parts.front().level != dec.min_level) return false;
  LaurentPolynomial recombined;
  std::int64_t previous = -1;
  for (const auto& part : dec.parts) {
    if (part.level <= previous || part.level > n) return false;
    if (part.numerator.is_zero() || !part.numerator.has_nonnegative_coefficients()) return false;
    recombined += mul_one_minus_t_pow(n - part.level, part.numerator);
    previous = part.level;
  }
  return recombined == rs.numerator();
}

}  // namespace hdepth
