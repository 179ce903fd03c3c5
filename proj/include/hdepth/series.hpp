#pragma once

// Rational series Q(T) / (1 - T)^m and the exact decision of whether all of
// their (infinitely many) coefficients are nonnegative.

#include "hdepth/laurent.hpp"

#include <optional>

namespace hdepth {

// numerator / (1 - T)^denom_exponent, expanded as a Laurent series at 0.
class RationalSeries {
 public:
  RationalSeries(LaurentPolynomial numerator, std::int64_t denom_exponent);

  const LaurentPolynomial& numerator() const { return numerator_; }
  std::int64_t denom_exponent() const { return denom_exponent_; }

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

 private:
  LaurentPolynomial numerator_;
  std::int64_t denom_exponent_;
};

// Coefficients of T^offset .. T^truncation_degree() of a Laurent series.
struct SeriesPrefix {
  Degree offset = 0;
  std::vector<BigInt> coeffs;

  Degree truncation_degree() const { return offset + static_cast<Degree>(coeffs.size()) - 1; }
  BigInt coefficient(Degree k) const;
};

// Expansion up to and including T^max_degree. Requires max_degree >= the
// numerator's offset (>= 0 for a zero numerator).
SeriesPrefix expand(const RationalSeries& rs, Degree max_degree);

class PositivityCertificate {
 public:
  enum class Verdict { Positive, NegativeAt };

  static PositivityCertificate positive(Degree tail_bound);
  static PositivityCertificate negative_at(Degree degree, BigInt value);

  Verdict verdict() const { return verdict_; }
  bool is_positive() const { return verdict_ == Verdict::Positive; }

  // NegativeAt only: first degree with a negative coefficient, and that
  // coefficient.
  Degree witness_degree() const;
  const BigInt& witness_value() const;
  // Positive only: every coefficient above this degree is certified
  // nonnegative by the tail argument; the ones at or below were scanned.
  Degree tail_bound() const;

 private:
  PositivityCertificate(Verdict v, Degree d, BigInt value) : verdict_(v), degree_(d), value_(std::move(value)) {}

  Verdict verdict_;
  Degree degree_;
  BigInt value_;
};

// Decides whether every coefficient of numerator / (1 - T)^m is >= 0.
//
// The coefficients of T^k for k >= b (b the numerator's top degree) agree
// with a polynomial f(k - b) of degree < m whose forward differences at 0 are
// read off the iterated prefix sums. Degrees up to b + m are scanned
// directly. If the differences are all nonnegative the tail is certified at
// once; otherwise the differences are stepped forward one degree at a time
// until either f goes negative, all differences become nonnegative, or the
// walk passes a Cauchy root bound of f, after which f has the sign of its
// leading coefficient.
PositivityCertificate check_positivity(const RationalSeries& rs);

}  // namespace hdepth
