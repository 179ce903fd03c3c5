// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "hdepth/audit.hpp"
#include "hdepth/catalog.hpp"
#include "hdepth/depth.hpp"
#include "hdepth/power_theorem.hpp"
#include "hdepth/special_functions.hpp"
#include "hdepth/sweep.hpp"

#include "test_support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace {

using namespace hdepth;
using sweep::Execution;

struct Outcome {
  bool pass;
  std::string detail;
};

struct Clock {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

// All power-ideal inputs of criteria 1 and 2, in (s, n) order.
std::vector<PowerIdealParams> sweep_inputs() {
  std::vector<PowerIdealParams> out;
  for (std::int64_t s = 1; s <= 8; ++s)
    for (std::int64_t n = 1; n <= 120; ++n) out.emplace_back(n, s);
  for (std::int64_t n = 121; n <= 200; ++n) out.emplace_back(n, 1);
  return out;
}

std::vector<RationalSeries> random_inputs(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RationalSeries> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(testing::random_positive_series(rng));
  return out;
}

Outcome main_theorem_sweep() {
  Clock clock;
  const auto rows = sweep::power_depth_table(1, 120, 1, 8, Execution::Serial);
  std::size_t bad = 0;
  for (const auto& r : rows) bad += !r.matches();
  const double t = clock.seconds();
  return {bad == 0 && t <= 60.0,
          std::to_string(rows.size()) + " (n, s) pairs, " + std::to_string(bad) + " mismatches, serial " + fmt_seconds(t)};
}

Outcome maximal_ideal() {
  std::size_t bad = 0;
  for (std::int64_t n = 1; n <= 200; ++n)
    bad += hdepth_via_numerator(power_ideal_series({n, 1})).hdepth != (n + 1) / 2;
  return {bad == 0, "n = 1..200, " + std::to_string(bad) + " mismatches"};
}

Outcome characterization_equivalence() {
  std::vector<RationalSeries> inputs;
  for (const auto& p : sweep_inputs()) inputs.push_back(power_ideal_series(p));
  const auto random = random_inputs(500, 20100125);
  inputs.insert(inputs.end(), random.begin(), random.end());
  const auto agree = sweep::map(std::span<const RationalSeries>(inputs), [](const RationalSeries& rs) {
    return hdepth_via_numerator(rs).hdepth == hdepth_via_multiplication(rs);
  }, Execution::Parallel);
  std::size_t bad = 0;
  for (bool a : agree) bad += !a;
  return {bad == 0, std::to_string(inputs.size()) + " series (500 random), " + std::to_string(bad) + " disagreements"};
}

Outcome decomposition_soundness() {
  Clock clock;
  std::vector<RationalSeries> inputs;
  for (const auto& p : sweep_inputs()) inputs.push_back(power_ideal_series(p));
  const auto random = random_inputs(200, 19650101);
  inputs.insert(inputs.end(), random.begin(), random.end());
  const auto ok = sweep::map(std::span<const RationalSeries>(inputs), [](const RationalSeries& rs) {
    const auto dec = decompose(rs);
    return verify_decomposition(dec, rs) && dec.min_level == hdepth_via_numerator(rs).hdepth;
  }, Execution::Parallel);
  std::size_t bad = 0;
  for (bool a : ok) bad += !a;
  return {bad == 0, std::to_string(inputs.size()) + " series (200 random), " + std::to_string(bad) + " failures, " +
                        fmt_seconds(clock.seconds())};
}

std::string audit_detail(const audit::AuditReport& r) {
  return r.check_name + " " + std::to_string(r.total_points) + " points, " + std::to_string(r.failures.size()) +
         " failures";
}

Outcome expansion_formula() {
  Clock clock;
  audit::AuditGrid g;
  g.n_max = 20;
  g.s_max = 5;
  const auto r = audit::run("prop0", g);
  const double t = clock.seconds();
  return {r.passed() && t <= 10.0, audit_detail(r) + ", " + fmt_seconds(t)};
}

Outcome binomial_and_syzygy_identities() {
  audit::AuditGrid a;
  a.max = 12;
  const auto lemma = audit::run("lemma4", a);
  audit::AuditGrid b;
  b.n_max = 10;
  b.k_max = 20;
  const auto syz = audit::run("syzygy-triple", b);
  return {lemma.passed() && syz.passed(), audit_detail(lemma) + "; " + audit_detail(syz)};
}

Outcome critical_degree_grid() {
  audit::AuditGrid g;
  g.n_max = 150;
  g.s_max = 10;
  const auto r = audit::run("prop1", g);
  // Ties at k = s + 1 occur exactly when (s + 1) | (n + s).
  std::size_t tie_mismatches = 0;
  std::size_t ties = 0;
  for (std::int64_t s = 1; s <= 10; ++s)
    for (std::int64_t n = 1; n <= 150; ++n) {
      if (audit::depth_bound(n, s) < 2) continue;
      const auto c = audit::prop1_sides(n, s, s + 1);
      const bool tie = c.lhs == c.rhs;
      ties += tie;
      tie_mismatches += tie != ((n + s) % (s + 1) == 0);
    }
  const auto example = audit::prop1_sides(7, 2, 3);
  const bool example_ok = example.lhs == 20 && example.rhs == 20;
  return {r.passed() && tie_mismatches == 0 && example_ok,
          audit_detail(r) + ", " + std::to_string(ties) + " ties at k = s+1, " + std::to_string(tie_mismatches) +
              " off the divisibility pattern"};
}

Outcome integer_inequality_grids() {
  audit::AuditGrid g;
  g.s_max = 12;
  g.n_max = 400;
  const auto l5 = audit::run("lemma5", g);
  const auto e15 = audit::run("eq15", g);
  audit::AuditGrid h;
  h.ell_max = 50;
  h.s_max = 12;
  const auto e19 = audit::run("eq19", h);
  return {l5.passed() && e15.passed() && e19.passed(),
          audit_detail(l5) + "; " + audit_detail(e15) + "; " + audit_detail(e19)};
}

Outcome digamma_accuracy() {
  const double gamma = kEulerGamma;
  const double quarter = -gamma - std::numbers::pi / 2 - 3 * std::numbers::ln2;
  double ref_1025 = quarter;
  for (int j = 0; j < 10; ++j) ref_1025 += 1.0 / (0.25 + j);
  const double errors[] = {
      std::abs(digamma(1.0) + gamma),
      std::abs(digamma(2.0) - (1 - gamma)),
      std::abs(digamma(0.5) - (-gamma - 2 * std::numbers::ln2)),
      std::abs(digamma(10.25) - ref_1025),
      std::abs(digamma(0.25) - quarter),
  };
  double worst_point = 0;
  for (double e : errors) worst_point = std::max(worst_point, e);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(0.01, 100.0);
  double worst_recurrence = 0;
  for (int i = 0; i < 10000; ++i) {
    const double x = dist(rng);
    worst_recurrence = std::max(worst_recurrence, std::abs(digamma(x + 1) - digamma(x) - 1 / x));
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "max point error %.2e (<= 1e-10), max recurrence residual %.2e (<= 1e-11)", worst_point,
                worst_recurrence);
  return {worst_point <= 1e-10 && worst_recurrence <= 1e-11, buf};
}

Outcome digamma_inequality_grids() {
  audit::AuditGrid g;
  g.points = 10000;
  g.margin = 1e-9;
  const auto l1 = audit::run("lemma1", g);
  const auto e14 = audit::run("eq14", g);
  audit::AuditGrid h;
  h.points = 1000;
  h.margin = 1e-9;
  const auto e7 = audit::run("eq7", h);
  const bool at_two = std::log(2.0) - 7.0 / 12 > 0 && audit::check_eq7(2.0, 1e-9);
  return {l1.passed() && e14.passed() && e7.passed() && at_two,
          audit_detail(l1) + "; " + audit_detail(e14) + "; " + audit_detail(e7)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"main theorem sweep, n <= 120, s <= 8", main_theorem_sweep},
      {"maximal ideal, n <= 200", maximal_ideal},
      {"numerator route equals multiplication route", characterization_equivalence},
      {"decompositions verify at the depth", decomposition_soundness},
      {"expanded coefficient formula vs convolution", expansion_formula},
      {"binomial identity and syzygy triple equality", binomial_and_syzygy_identities},
      {"coefficient comparison at the critical degree", critical_degree_grid},
      {"exact integer inequality grids", integer_inequality_grids},
      {"digamma accuracy", digamma_accuracy},
      {"digamma inequality grids", digamma_inequality_grids},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s [%zu] %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
