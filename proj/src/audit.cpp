#include "hdepth/audit.hpp"

#include "hdepth/catalog.hpp"
#include "hdepth/power_theorem.hpp"
#include "hdepth/special_functions.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <span>
#include <stdexcept>
#include <tuple>
#include <array>
#include <algorithm>

namespace hdepth::audit {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt(const BigInt& x) { return x.get_str(); }
std::string fmt(std::int64_t x) { return std::to_string(x); }

std::string describe(const RealParams& p) {
  return "n=" + fmt(p.n) + " s=" + fmt(p.s) + " k=" + fmt(p.k) + " t=" + fmt(p.t);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void require_lemma5_range(std::int64_t n, std::int64_t s) {
  require(s >= 2 && n > 3 * s + 3, "need s >= 2 and n > 3s + 3 (n=" + fmt(n) + " s=" + fmt(s) + ")");
}

double binomial_real(double a, double b) {
  return std::exp(log_gamma(a + 1) - log_gamma(b + 1) - log_gamma(a - b + 1));
}

// prod_{i=lo}^{hi} i
BigInt product_range(std::int64_t lo, std::int64_t hi) {
  BigInt p = 1;
  for (std::int64_t i = lo; i <= hi; ++i) p *= i;
  return p;
}

}  // namespace

double RealParams::r() const { return std::ceil(n / (s + 1)); }

std::int64_t depth_bound(std::int64_t n, std::int64_t s) { return hdepth_power_closed_form(PowerIdealParams(n, s)); }

// Digamma comparison in k ---------------------------------------------------

Comparison<double> lemma1_sides(const RealParams& p) {
  const double r = p.r();
  require(p.n >= 1 && p.t >= 1 && p.s >= 2 && p.k >= p.s + 2 && p.k <= r + p.s - p.t - 1,
          "lemma1: parameters outside n, t >= 1, s >= 2, s+2 <= k <= r+s-t-1 (" + describe(p) + ")");
  return {digamma(p.n + p.k - r) - digamma(p.k + 1), digamma(r - p.t - p.k + p.s + 1) - digamma(p.k - p.s + 1)};
}

bool check_lemma1(const RealParams& p, double margin) {
  const auto c = lemma1_sides(p);
  return c.lhs - c.rhs > margin;
}

Comparison<double> eq7_sides(double s) {
  require(s >= 2, "eq7: need s >= 2");
  return {std::log(s) + digamma(3), digamma(s + 3)};
}

bool check_eq7(double s, double margin) {
  const auto c = eq7_sides(s);
  return c.lhs - c.rhs > margin;
}

// Critical-degree coefficient comparison -------------------------------------

Comparison<BigInt> prop1_sides(std::int64_t n, std::int64_t s, std::int64_t k) {
  require(n >= 1 && s >= 1, "prop1: need n, s >= 1");
  const std::int64_t r = depth_bound(n, s);
  require(k > s && k < s + r, "prop1: need s < k < s + r");
  BigInt rhs = 0;
  for (std::int64_t t = 1; t <= r; ++t) rhs += binomial(r - t, k - s) * binomial(n - t + s - 1, s - 1);
  return {binomial(n + k - r - 1, k), rhs};
}

AuditReport check_prop1(std::int64_t n, std::int64_t s) {
  const std::int64_t r = depth_bound(n, s);
  AuditReport report{"prop1", "n=" + fmt(n) + " s=" + fmt(s) + " k=s+1..s+r-1", 0, {}, {}};
  for (std::int64_t k = s + 1; k <= s + r - 1; ++k) {
    ++report.total_points;
    auto c = prop1_sides(n, s, k);
    if (c.lhs < c.rhs) report.failures.push_back({"n=" + fmt(n) + " s=" + fmt(s) + " k=" + fmt(k), fmt(c.lhs), fmt(c.rhs)});
  }
  return report;
}

// Integer inequalities for n > 3s + 3 ----------------------------------------

BigInt big_n(std::int64_t n, std::int64_t s, std::int64_t r) {
  const BigInt ns = n + s;
  return ns * (ns + 1) - BigInt(r) * ns * (s + 2) + binomial(std::max<std::int64_t>(r, 0), 2) * (s + 1) * (s + 2);
}

Comparison<BigInt> lemma5_sides(std::int64_t n, std::int64_t s) {
  require_lemma5_range(n, s);
  const std::int64_t r = depth_bound(n, s);
  return {2 * binomial(n + s - r + 1, s + 2),
          binomial(n + s + 1, s + 2) - r * binomial(n + s, s + 1) + binomial(r, 2) * binomial(n + s - 1, s)};
}

bool check_lemma5(std::int64_t n, std::int64_t s) {
  const auto c = lemma5_sides(n, s);
  return c.lhs >= c.rhs;
}

Comparison<BigInt> eq15a_sides(std::int64_t n, std::int64_t s) {
  require_lemma5_range(n, s);
  const std::int64_t r = depth_bound(n, s);
  return {(r - 1) * big_n(n, s, r), BigInt(n - 1) * (n + s)};
}

bool check_eq15a(std::int64_t n, std::int64_t s) {
  const auto c = eq15a_sides(n, s);
  return c.lhs >= c.rhs;
}

Comparison<BigInt> eq15b_sides(std::int64_t n, std::int64_t s) {
  require_lemma5_range(n, s);
  const std::int64_t r = depth_bound(n, s);
  return {2 * big_n(n, s, r) + BigInt((r - 2) * s + 1) * s, BigInt(n - r + 1) * (2 * n + 2 * s + 1 - r * (s + 2))};
}

bool check_eq15b(std::int64_t n, std::int64_t s) {
  const auto c = eq15b_sides(n, s);
  return c.lhs >= c.rhs;
}

Comparison<double> eq14_sides(double n, std::int64_t s) {
  require(s >= 2 && n > 3.0 * static_cast<double>(s) + 3, "eq14: need s >= 2 and n > 3s + 3");
  const double sd = static_cast<double>(s);
  const double r = std::ceil(n / (sd + 1));
  const double big = (n + sd) * (n + sd + 1) - r * (n + sd) * (sd + 2) + r * (r - 1) / 2 * (sd + 1) * (sd + 2);
  return {digamma(n + sd - r + 2) - digamma(n - r),
          digamma(n + sd) - digamma(n) + (2 * n + 2 * sd + 1 - r * (sd + 2)) / big};
}

bool check_eq14(double n, std::int64_t s, double margin) {
  const auto c = eq14_sides(n, s);
  return c.lhs - c.rhs > margin;
}

Comparison<BigInt> eq19_sides(std::int64_t ell, std::int64_t s) {
  require(ell >= 3 && s >= 2, "eq19: need l >= 3 and s >= 2");
  // ((l+1)s-1)! / (ls-2)!  and  ((l+1)(s+1)-2)! / (l(s+1)-2)!
  const BigInt left = product_range(ell * s - 1, (ell + 1) * s - 1);
  const BigInt right = product_range(ell * (s + 1) - 1, (ell + 1) * (s + 1) - 2);
  return {4 * left, right};
}

bool check_eq19(std::int64_t ell, std::int64_t s) {
  const auto c = eq19_sides(ell, s);
  return c.lhs >= c.rhs;
}

Comparison<double> eq5_sides(std::int64_t ell, std::int64_t s) {
  require(ell >= 2 && s >= 2, "eq5: need l >= 2 and s >= 2");
  const double a = static_cast<double>((ell + 1) * s + 1);
  return {digamma(a) - digamma(a + static_cast<double>(s)), -1.0 / static_cast<double>(ell - 1)};
}

bool check_eq5(std::int64_t ell, std::int64_t s, double margin) {
  const auto c = eq5_sides(ell, s);
  return c.lhs - c.rhs > margin;
}

// Derivative comparison -----------------------------------------------------

namespace {

struct Lemma3Terms {
  double r;
  std::vector<double> upper;    // r - t'
  std::vector<double> inner;    // C(n - t' + s - 1, s - 1)
};

Lemma3Terms lemma3_terms(const RealParams& p) {
  const double r = p.r();
  require(p.n >= 1 && p.t >= 1 && p.s >= 2 && p.k >= p.s + 2 && p.k <= r + p.s - p.t - 1,
          "lemma3: parameters outside n, t >= 1, s >= 2, s+2 <= k0 <= r+s-t-1 (" + describe(p) + ")");
  Lemma3Terms terms{r, {}, {}};
  for (double t = 1; t <= r; t += 1) {
    const double arg = r - t - p.k + p.s + 1;
    if (arg <= 0) continue;
    // Poles of Gamma(arg) at the finite-difference stencil.
    require(arg > 2 * kDerivativeStep, "lemma3: gamma argument " + fmt(arg) + " too close to a pole (" + describe(p) + ")");
    terms.upper.push_back(r - t);
    terms.inner.push_back(binomial_real(p.n - t + p.s - 1, p.s - 1));
  }
  return terms;
}

double lemma3_lhs_value(const RealParams& p, double r, double k) {
  return std::exp(log_gamma(p.n + k - r) - log_gamma(k + 1) - log_gamma(p.n - r));
}

double lemma3_rhs_value(const RealParams& p, const Lemma3Terms& terms, double k) {
  double sum = 0;
  for (std::size_t i = 0; i < terms.upper.size(); ++i) {
    const double up = terms.upper[i];
    sum += std::exp(log_gamma(up + 1) - log_gamma(k - p.s + 1) - log_gamma(up - k + p.s + 1)) * terms.inner[i];
  }
  return sum;
}

}  // namespace

DerivativeComparison lemma3_derivatives(const RealParams& p) {
  const Lemma3Terms terms = lemma3_terms(p);
  const double r = terms.r;
  const double k = p.k;
  require(p.n - r > 0, "lemma3: need n > r");

  DerivativeComparison out;
  out.lhs = (digamma(p.n + k - r) - digamma(k + 1)) * lemma3_lhs_value(p, r, k);
  for (std::size_t i = 0; i < terms.upper.size(); ++i) {
    const double up = terms.upper[i];
    const double value = std::exp(log_gamma(up + 1) - log_gamma(k - p.s + 1) - log_gamma(up - k + p.s + 1)) * terms.inner[i];
    out.rhs += (digamma(up - k + p.s + 1) - digamma(k - p.s + 1)) * value;
  }
  const double h = kDerivativeStep;
  out.lhs_numeric = (lemma3_lhs_value(p, r, k + h) - lemma3_lhs_value(p, r, k - h)) / (2 * h);
  out.rhs_numeric = (lemma3_rhs_value(p, terms, k + h) - lemma3_rhs_value(p, terms, k - h)) / (2 * h);
  return out;
}

bool check_lemma3_derivative(const RealParams& p, double margin) {
  const auto d = lemma3_derivatives(p);
  auto close = [](double analytic, double numeric) {
    return std::abs(analytic - numeric) <= kDerivativeTolerance * std::max(std::abs(analytic), 1e-8);
  };
  return d.lhs - d.rhs > margin && close(d.lhs, d.lhs_numeric) && close(d.rhs, d.rhs_numeric);
}

// Sampling --------------------------------------------------------------------

namespace {

constexpr double kJumpOffsets[] = {1e-9, 1e-6, 1e-3, 0.25};

double uniform(std::mt19937_64& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

bool near_jump(std::mt19937_64& rng) { return std::uniform_int_distribution<int>(0, 2)(rng) == 0; }

double jump_offset(std::mt19937_64& rng) { return kJumpOffsets[uniform_int(rng, 0, std::size(kJumpOffsets) - 1)]; }

// n in ((t+2)(s+1), n_max], either uniform or just above a multiple of s+1.
double sample_n(std::mt19937_64& rng, double s, double t, double n_max) {
  const double lo = (t + 2) * (s + 1);
  if (near_jump(rng)) {
    const auto first = static_cast<std::int64_t>(std::ceil(lo / (s + 1)));
    const auto last = static_cast<std::int64_t>(std::floor(n_max / (s + 1))) - 1;
    if (first <= last) return static_cast<double>(uniform_int(rng, first, last)) * (s + 1) + jump_offset(rng);
  }
  return uniform(rng, lo, n_max);
}

// k in [s+2, r+s-t-1]; endpoints are drawn on purpose now and then.
std::optional<double> sample_k(std::mt19937_64& rng, const RealParams& p, bool integral) {
  const double lo = p.s + 2;
  const double hi = p.r() + p.s - p.t - 1;
  if (hi < lo) return std::nullopt;
  if (integral) {
    const double first = std::ceil(lo);
    const double last = std::floor(hi);
    if (last < first) return std::nullopt;
    return static_cast<double>(uniform_int(rng, static_cast<std::int64_t>(first), static_cast<std::int64_t>(last)));
  }
  switch (uniform_int(rng, 0, 9)) {
    case 0: return lo;
    case 1: return hi;
    default: return uniform(rng, lo, hi);
  }
}

}  // namespace

std::vector<RealParams> sample_lemma1_points(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RealParams> out;
  out.reserve(count);
  while (out.size() < count) {
    RealParams p;
    p.s = uniform(rng, 2, 12);
    p.t = uniform_int(rng, 0, 3) == 0 ? 1.0 : uniform(rng, 1, 4);
    p.n = sample_n(rng, p.s, p.t, 600);
    if (auto k = sample_k(rng, p, false)) {
      p.k = *k;
      out.push_back(p);
    }
  }
  return out;
}

std::vector<Eq14Point> sample_eq14_points(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Eq14Point> out;
  out.reserve(count);
  while (out.size() < count) {
    const std::int64_t s = uniform_int(rng, 2, 12);
    const double s1 = static_cast<double>(s + 1);
    const double lo = 3 * s1;
    const double n_max = 1000;
    double n;
    if (near_jump(rng)) {
      const std::int64_t ell = uniform_int(rng, 4, static_cast<std::int64_t>(n_max / s1) - 1);
      n = static_cast<double>(ell) * s1 + (uniform_int(rng, 0, 4) == 0 ? 0.0 : jump_offset(rng));
    } else {
      n = uniform(rng, lo, n_max);
    }
    if (n > lo) out.push_back({n, s});
  }
  return out;
}

std::vector<RealParams> sample_lemma3_points(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RealParams> out;
  out.reserve(count);
  while (out.size() < count) {
    RealParams p;
    p.s = static_cast<double>(uniform_int(rng, 2, 6));
    p.t = uniform_int(rng, 0, 1) == 0 ? 1.0 : uniform(rng, 1, 2);
    p.n = sample_n(rng, p.s, p.t, 200);
    auto k = sample_k(rng, p, uniform_int(rng, 0, 1) == 0);
    if (!k) continue;
    p.k = *k;
    try {
      lemma3_terms(p);
    } catch (const std::invalid_argument&) {
      continue;
    }
    out.push_back(p);
  }
  return out;
}

// Grid runners ------------------------------------------------------------------

namespace {

using sweep::Execution;
using Outcome = std::optional<AuditFailure>;

template <class Point, class Fn>
void collect(AuditReport& report, const std::vector<Point>& points, Fn fn, Execution exec) {
  report.total_points += points.size();
  for (auto& outcome : sweep::map(std::span<const Point>(points), fn, exec))
    if (outcome) report.failures.push_back(std::move(*outcome));
}

template <class T>
Outcome fail(std::string params, const T& lhs, const T& rhs) {
  return AuditFailure{std::move(params), fmt(lhs), fmt(rhs)};
}

AuditReport audit_lemma4(const AuditGrid& g, Execution exec) {
  const std::int64_t max = g.max.value_or(12);
  AuditReport report{"lemma4", "1 <= n,s,r <= " + fmt(max) + ", s <= k <= 3(r+s), n+k-r-1 >= 0", 0, {}, {}};
  std::vector<std::array<std::int64_t, 4>> points;
  for (std::int64_t n = 1; n <= max; ++n)
    for (std::int64_t s = 1; s <= max; ++s)
      for (std::int64_t r = 1; r <= max; ++r)
        for (std::int64_t k = s; k <= 3 * (r + s); ++k)
          if (n + k - r - 1 >= 0) points.push_back({n, s, r, k});
  collect(report, points, [](const std::array<std::int64_t, 4>& p) -> Outcome {
    const auto [n, s, r, k] = p;
    const BigInt lhs = lemma4_lhs(n, s, r, k);
    const BigInt rhs8 = lemma4_rhs8(n, s, r, k);
    const BigInt rhs9 = lemma4_rhs9(n, s, r, k);
    if (lhs == rhs8 && lhs == rhs9) return std::nullopt;
    return AuditFailure{"n=" + fmt(n) + " s=" + fmt(s) + " r=" + fmt(r) + " k=" + fmt(k), fmt(lhs),
                        fmt(rhs8) + " / " + fmt(rhs9)};
  }, exec);
  return report;
}

AuditReport audit_syzygy(const AuditGrid& g, Execution exec) {
  const std::int64_t n_max = g.n_max.value_or(10);
  const std::int64_t k_max = g.k_max.value_or(20);
  AuditReport report{"syzygy-triple", "n <= " + fmt(n_max) + ", 1 <= u <= r < n, 0 <= k <= " + fmt(k_max), 0, {}, {}};
  std::vector<std::array<std::int64_t, 4>> points;
  for (std::int64_t n = 1; n <= n_max; ++n)
    for (std::int64_t r = 1; r < n; ++r)
      for (std::int64_t u = 1; u <= r; ++u)
        for (std::int64_t k = 0; k <= k_max; ++k) points.push_back({n, r, u, k});
  collect(report, points, [](const std::array<std::int64_t, 4>& p) -> Outcome {
    const SyzygyParams sp(p[0], p[1], p[2], p[3]);
    const BigInt right = syzygy_hilbert_right(sp);
    const BigInt left = syzygy_hilbert_left(sp);
    const BigInt closed = syzygy_hilbert_closed(sp);
    if (right == left && left == closed) return std::nullopt;
    return AuditFailure{"n=" + fmt(sp.n) + " r=" + fmt(sp.r) + " u=" + fmt(sp.u) + " k=" + fmt(sp.k), fmt(right),
                        fmt(left) + " / " + fmt(closed)};
  }, exec);
  return report;
}

AuditReport audit_prop0(const AuditGrid& g, Execution exec) {
  const std::int64_t n_max = g.n_max.value_or(20);
  const std::int64_t s_max = g.s_max.value_or(5);
  AuditReport report{"prop0", "n <= " + fmt(n_max) + ", s <= " + fmt(s_max) + ", 0 < r < n, k <= r+s+10", 0, {}, {}};
  std::vector<std::array<std::int64_t, 4>> points;
  for (std::int64_t n = 2; n <= n_max; ++n)
    for (std::int64_t s = 1; s <= s_max; ++s)
      for (std::int64_t r = 1; r < n; ++r)
        for (std::int64_t k = 0; k <= r + s + 10; ++k) points.push_back({n, s, r, k});
  collect(report, points, [](const std::array<std::int64_t, 4>& p) -> Outcome {
    const ExpansionParams ep(p[0], p[1], p[2], p[3]);
    const BigInt formula = expanded_coefficient(ep);
    const BigInt convolution = expanded_coefficient_oracle(ep);
    if (formula == convolution) return std::nullopt;
    return fail("n=" + fmt(ep.n) + " s=" + fmt(ep.s) + " r=" + fmt(ep.r) + " k=" + fmt(ep.k), formula, convolution);
  }, exec);
  return report;
}

AuditReport audit_prop1(const AuditGrid& g, Execution exec) {
  const std::int64_t n_max = g.n_max.value_or(150);
  const std::int64_t s_max = g.s_max.value_or(10);
  AuditReport report{"prop1", "1 <= s <= " + fmt(s_max) + ", 1 <= n <= " + fmt(n_max) + ", s < k < s + r", 0, {}, {}};
  std::vector<std::pair<std::int64_t, std::int64_t>> grid;
  for (std::int64_t s = 1; s <= s_max; ++s)
    for (std::int64_t n = 1; n <= n_max; ++n) grid.emplace_back(n, s);
  auto sub = sweep::map(std::span<const std::pair<std::int64_t, std::int64_t>>(grid),
                        [](const std::pair<std::int64_t, std::int64_t>& p) { return check_prop1(p.first, p.second); }, exec);
  std::size_t ties = 0;
  std::size_t tie_mismatches = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    report.total_points += sub[i].total_points;
    for (auto& f : sub[i].failures) report.failures.push_back(std::move(f));
    const auto [n, s] = grid[i];
    if (depth_bound(n, s) < 2) continue;
    const auto c = prop1_sides(n, s, s + 1);
    const bool tie = c.lhs == c.rhs;
    ties += tie;
    tie_mismatches += tie != ((n + s) % (s + 1) == 0);
  }
  report.notes.push_back("equality at k = s+1 in " + std::to_string(ties) + " cases; " +
                         (tie_mismatches == 0 ? "exactly those with (s+1) | (n+s)"
                                              : std::to_string(tie_mismatches) + " disagree with (s+1) | (n+s)"));
  return report;
}

template <class Check, class Sides>
AuditReport audit_lemma5_family(std::string name, const AuditGrid& g, Execution exec, Check check, Sides sides) {
  const std::int64_t s_max = g.s_max.value_or(12);
  const std::int64_t n_max = g.n_max.value_or(400);
  AuditReport report{std::move(name), "2 <= s <= " + fmt(s_max) + ", 3s+4 <= n <= " + fmt(n_max), 0, {}, {}};
  std::vector<std::pair<std::int64_t, std::int64_t>> points;
  for (std::int64_t s = 2; s <= s_max; ++s)
    for (std::int64_t n = 3 * s + 4; n <= n_max; ++n) points.emplace_back(n, s);
  collect(report, points, [&](const std::pair<std::int64_t, std::int64_t>& p) -> Outcome {
    if (check(p.first, p.second)) return std::nullopt;
    const auto c = sides(p.first, p.second);
    return fail("n=" + fmt(p.first) + " s=" + fmt(p.second), c.lhs, c.rhs);
  }, exec);
  return report;
}

AuditReport audit_eq15(const AuditGrid& g, Execution exec) {
  AuditReport a = audit_lemma5_family("eq15", g, exec, check_eq15a, eq15a_sides);
  AuditReport b = audit_lemma5_family("eq15", g, exec, check_eq15b, eq15b_sides);
  for (auto& f : a.failures) f.parameters = "(A) " + f.parameters;
  for (auto& f : b.failures) a.failures.push_back({"(B) " + f.parameters, f.lhs, f.rhs});
  a.total_points += b.total_points;
  a.grid_description += ", inequalities A and B";
  return a;
}

AuditReport audit_eq19(const AuditGrid& g, Execution exec) {
  const std::int64_t ell_max = g.ell_max.value_or(50);
  const std::int64_t s_max = g.s_max.value_or(12);
  AuditReport report{"eq19", "3 <= l <= " + fmt(ell_max) + ", 2 <= s <= " + fmt(s_max), 0, {}, {}};
  std::vector<std::pair<std::int64_t, std::int64_t>> points;
  for (std::int64_t ell = 3; ell <= ell_max; ++ell)
    for (std::int64_t s = 2; s <= s_max; ++s) points.emplace_back(ell, s);
  collect(report, points, [](const std::pair<std::int64_t, std::int64_t>& p) -> Outcome {
    const auto c = eq19_sides(p.first, p.second);
    if (c.lhs >= c.rhs) return std::nullopt;
    return fail("l=" + fmt(p.first) + " s=" + fmt(p.second), c.lhs, c.rhs);
  }, exec);
  return report;
}

AuditReport audit_eq5(const AuditGrid& g, Execution exec) {
  const std::int64_t ell_max = g.ell_max.value_or(50);
  const std::int64_t s_max = g.s_max.value_or(12);
  const double margin = g.margin;
  AuditReport report{"eq5", "2 <= l <= " + fmt(ell_max) + ", 2 <= s <= " + fmt(s_max) + ", margin " + fmt(margin), 0, {}, {}};
  std::vector<std::pair<std::int64_t, std::int64_t>> points;
  for (std::int64_t ell = 2; ell <= ell_max; ++ell)
    for (std::int64_t s = 2; s <= s_max; ++s) points.emplace_back(ell, s);
  collect(report, points, [margin](const std::pair<std::int64_t, std::int64_t>& p) -> Outcome {
    if (check_eq5(p.first, p.second, margin)) return std::nullopt;
    const auto c = eq5_sides(p.first, p.second);
    return fail("l=" + fmt(p.first) + " s=" + fmt(p.second), c.lhs, c.rhs);
  }, exec);
  return report;
}

AuditReport audit_eq7(const AuditGrid& g, Execution exec) {
  const std::size_t count = g.points.value_or(1000);
  const double margin = g.margin;
  AuditReport report{"eq7", fmt(static_cast<std::int64_t>(count)) + " points s in [2, 100] (s = 2 included), margin " + fmt(margin), 0, {}, {}};
  std::mt19937_64 rng(g.seed);
  std::vector<double> points{2.0};
  while (points.size() < count) points.push_back(uniform(rng, 2, 100));
  collect(report, points, [margin](const double& s) -> Outcome {
    if (check_eq7(s, margin)) return std::nullopt;
    const auto c = eq7_sides(s);
    return fail("s=" + fmt(s), c.lhs, c.rhs);
  }, exec);
  const double at_two = std::log(2.0) + digamma(3) - digamma(5);
  report.notes.push_back("value at s = 2 is log 2 - 7/12 = " + fmt(at_two) +
                         " (psi(5) - psi(3) = 1/3 + 1/4); the constant log 2 - 1/3 - 4/5 = " +
                         fmt(std::log(2.0) - 1.0 / 3 - 4.0 / 5) + " does not arise from psi");
  return report;
}

AuditReport audit_lemma1(const AuditGrid& g, Execution exec) {
  const std::size_t count = g.points.value_or(10000);
  const double margin = g.margin;
  AuditReport report{"lemma1", fmt(static_cast<std::int64_t>(count)) + " random real points, seed " + std::to_string(g.seed) + ", margin " + fmt(margin), 0, {}, {}};
  collect(report, sample_lemma1_points(count, g.seed), [margin](const RealParams& p) -> Outcome {
    if (check_lemma1(p, margin)) return std::nullopt;
    const auto c = lemma1_sides(p);
    return fail(describe(p), c.lhs, c.rhs);
  }, exec);
  return report;
}

AuditReport audit_eq14(const AuditGrid& g, Execution exec) {
  const std::size_t count = g.points.value_or(10000);
  const double margin = g.margin;
  AuditReport report{"eq14", fmt(static_cast<std::int64_t>(count)) + " random real n, seed " + std::to_string(g.seed) + ", margin " + fmt(margin), 0, {}, {}};
  collect(report, sample_eq14_points(count, g.seed), [margin](const Eq14Point& p) -> Outcome {
    if (check_eq14(p.n, p.s, margin)) return std::nullopt;
    const auto c = eq14_sides(p.n, p.s);
    return fail("n=" + fmt(p.n) + " s=" + fmt(p.s), c.lhs, c.rhs);
  }, exec);
  return report;
}

AuditReport audit_lemma3(const AuditGrid& g, Execution exec) {
  const std::size_t count = g.points.value_or(2000);
  const double margin = g.margin;
  AuditReport report{"lemma3", fmt(static_cast<std::int64_t>(count)) + " random points, seed " + std::to_string(g.seed) + ", finite-difference step " + fmt(kDerivativeStep), 0, {}, {}};
  collect(report, sample_lemma3_points(count, g.seed), [margin](const RealParams& p) -> Outcome {
    if (check_lemma3_derivative(p, margin)) return std::nullopt;
    const auto d = lemma3_derivatives(p);
    return AuditFailure{describe(p), fmt(d.lhs) + " (numeric " + fmt(d.lhs_numeric) + ")",
                        fmt(d.rhs) + " (numeric " + fmt(d.rhs_numeric) + ")"};
  }, exec);
  return report;
}

using Runner = std::function<AuditReport(const AuditGrid&, Execution)>;

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table{
      {"lemma4", audit_lemma4},
      {"syzygy-triple", audit_syzygy},
      {"prop0", audit_prop0},
      {"prop1", audit_prop1},
      {"lemma1", audit_lemma1},
      {"lemma5",
       [](const AuditGrid& g, Execution e) { return audit_lemma5_family("lemma5", g, e, check_lemma5, lemma5_sides); }},
      {"eq14", audit_eq14},
      {"eq15", audit_eq15},
      {"eq19", audit_eq19},
      {"eq5", audit_eq5},
      {"eq7", audit_eq7},
      {"lemma3", audit_lemma3},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, _] : runners()) v.push_back(name);
    return v;
  }();
  return names;
}

AuditReport run(const std::string& name, const AuditGrid& grid, Execution exec) {
  const auto it = runners().find(name);
  if (it == runners().end()) throw std::invalid_argument("unknown audit check '" + name + "'");
  return it->second(grid, exec);
}

}  // namespace hdepth::audit
