#pragma once

// Laurent polynomials with arbitrary-precision integer coefficients.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hdepth {

using BigInt = mpz_class;
using Degree = std::int64_t;

// C(a, b) with a >= 0; zero when b < 0 or b > a. Throws std::domain_error
// for a < 0.
BigInt binomial(std::int64_t a, std::int64_t b);

// Finite sum of c_i T^(offset + i).
//
// Always kept canonical: the first and last stored coefficients are nonzero,
// and the zero polynomial has no coefficients and offset 0. Equality is
// therefore structural.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(Degree offset, std::vector<BigInt> coeffs);

  static LaurentPolynomial constant(BigInt c);
  static LaurentPolynomial monomial(BigInt c, Degree exponent);

  bool is_zero() const { return coeffs_.empty(); }
  Degree offset() const { return offset_; }
  // Only meaningful for nonzero polynomials.
  Degree top_degree() const { return offset_ + static_cast<Degree>(coeffs_.size()) - 1; }
  std::span<const BigInt> coeffs() const { return coeffs_; }

  // Coefficient of T^k; zero outside the support.
  BigInt coefficient(Degree k) const;

  bool has_nonnegative_coefficients() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

 private:
  void normalize();

  Degree offset_ = 0;
  std::vector<BigInt> coeffs_;
};

LaurentPolynomial scale(const BigInt& c, const LaurentPolynomial& p);

// (1 - T)^power * q by binomial expansion of the first factor.
LaurentPolynomial mul_one_minus_t_pow(std::int64_t power, const LaurentPolynomial& q);

// q with (1 - T) * q == p. Throws std::domain_error unless p(1) == 0.
LaurentPolynomial divide_by_one_minus_t(const LaurentPolynomial& p);

BigInt eval_at_one(const LaurentPolynomial& p);

// Text form "offset:c0,c1,...". The zero polynomial prints as "0:0".
std::string to_text(const LaurentPolynomial& p);
// Inverse of to_text; throws std::invalid_argument on malformed input.
LaurentPolynomial parse_laurent(std::string_view text);

// Human-readable form, e.g. "2T - T^2".
std::string to_string(const LaurentPolynomial& p);
std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p);

}  // namespace hdepth
