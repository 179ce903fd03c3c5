#include "hdepth/depth.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace hdepth;
using hdepth::testing::random_filtered_series;
using hdepth::testing::random_positive_series;

namespace {

LaurentPolynomial poly(Degree offset, std::vector<long> c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return LaurentPolynomial(offset, std::move(v));
}

}  // namespace

TEST_CASE("hdepth via the numerator") {
  SUBCASE("maximal ideal, n = 2") {
    const auto report = hdepth_via_numerator(RationalSeries(poly(1, {2, -1}), 2));
    CHECK(report.hdepth == 1);
    CHECK(report.certificate_at_depth.is_positive());
    REQUIRE(report.certificate_above_depth);
    CHECK_FALSE(report.certificate_above_depth->is_positive());
  }
  SUBCASE("free module") {
    const auto report = hdepth_via_numerator(RationalSeries(poly(0, {1}), 3));
    CHECK(report.hdepth == 3);
    CHECK_FALSE(report.certificate_above_depth);
  }
  SUBCASE("maximal ideal, n = 4") {
    const auto report = hdepth_via_numerator(RationalSeries(poly(1, {4, -6, 4, -1}), 4));
    CHECK(report.hdepth == 2);
    // q = 1 fails at T^2: 4 - 6 = -2.
    CHECK(report.certificate_above_depth->witness_degree() == 2);
    CHECK(report.certificate_above_depth->witness_value() == -2);
  }
  SUBCASE("rejects non-Hilbert input") {
    CHECK_THROWS_AS(hdepth_via_numerator(RationalSeries(poly(0, {1, -2}), 1)), NotAHilbertSeries);
    CHECK_THROWS_AS(hdepth_via_numerator(RationalSeries(LaurentPolynomial(), 2)), NotAHilbertSeries);
  }
}

TEST_CASE("hdepth via multiplication") {
  CHECK(hdepth_via_multiplication(RationalSeries(poly(1, {2, -1}), 2)) == 1);
  CHECK(hdepth_via_multiplication(RationalSeries(poly(0, {1}), 0)) == 0);
  CHECK(hdepth_via_multiplication(RationalSeries(LaurentPolynomial::monomial(1, 5), 1)) == 1);
  CHECK_THROWS_AS(hdepth_via_multiplication(RationalSeries(poly(0, {1, -2}), 1)), NotAHilbertSeries);
}

TEST_CASE("free modules have full depth") {
  for (Degree a = -3; a <= 3; ++a)
    for (std::int64_t n = 0; n <= 6; ++n) {
      const RationalSeries rs(LaurentPolynomial::monomial(1, a), n);
      CHECK(hdepth_via_numerator(rs).hdepth == n);
      CHECK(hdepth_via_multiplication(rs) == n);
    }
}

TEST_CASE("decompose examples") {
  SUBCASE("maximal ideal, n = 2") {
    const RationalSeries rs(poly(1, {2, -1}), 2);
    const auto dec = decompose(rs);
    CHECK(dec.min_level == 1);
    CHECK(verify_decomposition(dec, rs));
    CHECK(dec.parts == std::vector<DecompositionPart>{{1, poly(1, {1})}, {2, poly(1, {1})}});
  }
  SUBCASE("maximal ideal, n = 4") {
    const RationalSeries rs(poly(1, {4, -6, 4, -1}), 4);
    const auto dec = decompose(rs);
    CHECK(dec.min_level == 2);
    CHECK(verify_decomposition(dec, rs));
    CHECK(dec.parts == std::vector<DecompositionPart>{{2, poly(1, {3})}, {3, poly(3, {1})}, {4, poly(1, {1})}});
  }
  SUBCASE("already positive numerator") {
    const RationalSeries rs(poly(0, {1}), 2);
    const auto dec = decompose(rs);
    CHECK(dec.min_level == 2);
    CHECK(dec.parts == std::vector<DecompositionPart>{{2, poly(0, {1})}});
  }
  SUBCASE("search ceiling exhausted is an error") {
    const RationalSeries rs(poly(1, {4, -6, 4, -1}), 4);
    CHECK_THROWS_AS(decompose(rs, DecomposeOptions{0}), InternalInconsistency);
  }
}

TEST_CASE("verify_decomposition") {
  const RationalSeries rs(poly(1, {2, -1}), 2);
  CHECK(verify_decomposition({1, {{1, poly(1, {1})}, {2, poly(1, {1})}}}, rs));
  CHECK_FALSE(verify_decomposition({2, {{2, poly(1, {2, -1})}}}, rs));
  CHECK_FALSE(verify_decomposition({2, {{2, poly(1, {2})}}}, rs));
  // Levels out of order or above n.
  CHECK_FALSE(verify_decomposition({2, {{2, poly(1, {1})}, {1, poly(1, {1})}}}, rs));
  CHECK_FALSE(verify_decomposition({1, {{1, poly(1, {1})}, {3, poly(1, {1})}}}, rs));
  // min_level must name the first part.
  CHECK_FALSE(verify_decomposition({0, {{1, poly(1, {1})}, {2, poly(1, {1})}}}, rs));
  CHECK_FALSE(verify_decomposition({0, {}}, rs));
}

TEST_CASE("random positive series") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 400; ++i) {
    const RationalSeries rs = i % 2 == 0 ? random_positive_series(rng) : random_filtered_series(rng);
    CAPTURE(to_text(rs.numerator()));
    CAPTURE(rs.denom_exponent());
    const auto report = hdepth_via_numerator(rs);
    const std::int64_t d = report.hdepth;
    CHECK(d >= 0);
    CHECK(d <= rs.denom_exponent());
    CHECK(hdepth_via_multiplication(rs) == d);

    const auto dec = decompose(rs);
    CHECK(dec.min_level == d);
    CHECK(verify_decomposition(dec, rs));

    if (report.certificate_above_depth) {
      // A decomposition starting at level d + 1 would make (1 - T)^(d+1) H
      // positive; the witness shows it is not.
      const auto& cert = *report.certificate_above_depth;
      const auto lifted = mul_one_minus_t_pow(d + 1, rs.numerator());
      CHECK(hdepth::testing::series_coefficient(lifted, rs.denom_exponent(), cert.witness_degree()) ==
            cert.witness_value());
    }
  }
}
