#include "hdepth/power_theorem.hpp"

#include "hdepth/depth.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace hdepth;

TEST_CASE("expanded coefficient regimes") {
  CHECK(expanded_coefficient({7, 2, 3, 3}) == 0);
  CHECK(expanded_coefficient({7, 2, 3, 2}) == 28);
  // Tail regime: C(n+k-r-1, k) = C(8, 5).
  CHECK(expanded_coefficient({7, 2, 3, 5}) == 56);
  CHECK(expanded_coefficient({7, 2, 3, 1}) == 0);

  CHECK(expanded_coefficient_oracle({7, 2, 3, 3}) == 0);
  CHECK(expanded_coefficient_oracle({7, 2, 3, 2}) == 28);
  CHECK(expanded_coefficient_oracle({7, 2, 3, 5}) == 56);
  for (std::int64_t k = 0; k < 4; ++k) CHECK(expanded_coefficient_oracle({9, 4, 2, k}) == 0);

  CHECK_THROWS_AS(ExpansionParams(5, 2, 5, 0), std::invalid_argument);
  CHECK_THROWS_AS(ExpansionParams(5, 2, 0, 0), std::invalid_argument);
}

TEST_CASE("expanded coefficient agrees with convolution and with series expansion") {
  for (std::int64_t n = 2; n <= 12; ++n)
    for (std::int64_t s = 1; s <= 4; ++s)
      for (std::int64_t r = 1; r < n; ++r) {
        // Third route: expand (1-T)^r Q over (1-T)^n through series_core.
        const auto q = mul_one_minus_t_pow(r, power_ideal_series({n, s}).numerator());
        for (std::int64_t k = 0; k <= r + s + 6; ++k) {
          const ExpansionParams p(n, s, r, k);
          const BigInt formula = expanded_coefficient(p);
          REQUIRE(formula == expanded_coefficient_oracle(p));
          REQUIRE(formula == hdepth::testing::series_coefficient(q, n, k));
        }
      }
}

TEST_CASE("binomial identity, three forms") {
  CHECK(lemma4_lhs(4, 2, 2, 3) == 0);
  CHECK(lemma4_rhs8(4, 2, 2, 3) == 0);
  CHECK(lemma4_rhs9(4, 2, 2, 3) == 0);
  CHECK(lemma4_lhs(7, 2, 3, 3) == 0);
  CHECK(lemma4_rhs8(7, 2, 3, 3) == 0);
  CHECK(lemma4_rhs9(7, 2, 3, 3) == 0);
  // k < s: empty left sum. The first right-hand form still cancels to 0; in
  // the second the t-sum vanishes and only C(n+k-r-1, k) remains.
  CHECK(lemma4_lhs(5, 3, 2, 2) == 0);
  CHECK(lemma4_rhs8(5, 3, 2, 2) == 0);
  CHECK(lemma4_rhs9(5, 3, 2, 2) == 6);

  CHECK_THROWS_AS(lemma4_rhs8(1, 1, 5, 2), std::domain_error);
  CHECK_THROWS_AS(lemma4_rhs9(1, 1, 5, 2), std::domain_error);
  CHECK_THROWS_AS(lemma4_lhs(0, 1, 1, 1), std::invalid_argument);

  for (std::int64_t n = 1; n <= 8; ++n)
    for (std::int64_t s = 1; s <= 8; ++s)
      for (std::int64_t r = 1; r <= 8; ++r)
        for (std::int64_t k = 1; k <= 3 * (r + s); ++k) {
          if (n + k - r - 1 < 0) continue;
          const BigInt lhs = lemma4_lhs(n, s, r, k);
          REQUIRE(lhs == lemma4_rhs8(n, s, r, k));
          if (k >= s) REQUIRE(lhs == lemma4_rhs9(n, s, r, k));
        }
}

TEST_CASE("closed form and upper bound") {
  CHECK(hdepth_power_closed_form({7, 2}) == 3);
  CHECK(hdepth_power_closed_form({5, 1}) == 3);
  for (std::int64_t s = 1; s <= 20; ++s) CHECK(hdepth_power_closed_form({1, s}) == 1);

  CHECK(upper_bound_coefficient({7, 2}, 3) == 0);
  CHECK(upper_bound_coefficient({7, 2}, 4) == -28);
  CHECK(upper_bound_coefficient({7, 2}, 0) == 84);
  CHECK_THROWS(upper_bound_coefficient({7, 2}, -1));

  for (std::int64_t n = 1; n <= 40; ++n)
    for (std::int64_t s = 1; s <= 6; ++s) {
      const PowerIdealParams p(n, s);
      const std::int64_t d = hdepth_power_closed_form(p);
      CHECK(sgn(upper_bound_coefficient(p, d)) >= 0);
      CHECK(sgn(upper_bound_coefficient(p, d + 1)) < 0);
    }
}

TEST_CASE("formulas tie to the closed-form depth") {
  for (std::int64_t n = 2; n <= 25; ++n)
    for (std::int64_t s = 1; s <= 5; ++s) {
      const PowerIdealParams p(n, s);
      const std::int64_t r = hdepth_power_closed_form(p);
      if (r < n) {
        for (std::int64_t k = 0; k <= r + s + 10; ++k) REQUIRE(sgn(expanded_coefficient({n, s, r, k})) >= 0);
      }
      if (r + 1 < n) {
        const BigInt c = expanded_coefficient({n, s, r + 1, s + 1});
        CHECK(c == upper_bound_coefficient(p, r + 1));
        CHECK(sgn(c) < 0);
      }
      CHECK(hdepth_via_numerator(power_ideal_series(p)).hdepth == r);
    }
}
