#pragma once

// Falsification checks for the inequality chain behind the Hilbert depth of
// powers of the maximal ideal. Integer inequalities are checked exactly with
// big integers; inequalities over real parameters are checked in double
// precision against a margin.

#include "hdepth/laurent.hpp"
#include "hdepth/sweep.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hdepth::audit {

inline constexpr double kDefaultMargin = 1e-9;

template <class T>
struct Comparison {
  T lhs;
  T rhs;
};

// Real parameters of the digamma inequalities; r = ceil(n / (s + 1)).
struct RealParams {
  double n = 0;
  double s = 0;
  double k = 0;
  double t = 0;

  double r() const;
};

struct AuditFailure {
  std::string parameters;
  std::string lhs;
  std::string rhs;
};

struct AuditReport {
  std::string check_name;
  std::string grid_description;
  std::size_t total_points = 0;
  std::vector<AuditFailure> failures;  // in grid order
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
};

// ceil(n / (s + 1)) for integers.
std::int64_t depth_bound(std::int64_t n, std::int64_t s);

// psi(n+k-r) - psi(k+1)  vs  psi(r-t-k+s+1) - psi(k-s+1).
// Requires n, t >= 1, s >= 2 and s + 2 <= k <= r + s - t - 1.
Comparison<double> lemma1_sides(const RealParams& p);
bool check_lemma1(const RealParams& p, double margin = kDefaultMargin);

// log s + psi(3)  vs  psi(s + 3), for s >= 2.
Comparison<double> eq7_sides(double s);
bool check_eq7(double s, double margin = kDefaultMargin);

// C(n+k-r-1, k)  vs  sum_{t=1}^{r} C(r-t, k-s) C(n-t+s-1, s-1), for
// s < k < s + r with r = ceil(n / (s + 1)).
Comparison<BigInt> prop1_sides(std::int64_t n, std::int64_t s, std::int64_t k);
AuditReport check_prop1(std::int64_t n, std::int64_t s);

// (n+s)(n+s+1) - r(n+s)(s+2) + C(r,2)(s+1)(s+2)
BigInt big_n(std::int64_t n, std::int64_t s, std::int64_t r);

// The following require s >= 2 and n > 3s + 3; r = ceil(n / (s + 1)).
// 2 C(n+s-r+1, s+2)  vs  C(n+s+1, s+2) - r C(n+s, s+1) + C(r,2) C(n+s-1, s)
Comparison<BigInt> lemma5_sides(std::int64_t n, std::int64_t s);
bool check_lemma5(std::int64_t n, std::int64_t s);
// (r-1) N  vs  (n-1)(n+s)
Comparison<BigInt> eq15a_sides(std::int64_t n, std::int64_t s);
bool check_eq15a(std::int64_t n, std::int64_t s);
// 2N + ((r-2)s+1)s  vs  (n-r+1)(2n+2s+1-r(s+2))
Comparison<BigInt> eq15b_sides(std::int64_t n, std::int64_t s);
bool check_eq15b(std::int64_t n, std::int64_t s);

// psi(n+s-r+2) - psi(n-r)  vs  psi(n+s) - psi(n) + (2n+2s+1-r(s+2)) / N, real n.
Comparison<double> eq14_sides(double n, std::int64_t s);
bool check_eq14(double n, std::int64_t s, double margin = kDefaultMargin);

// 2 ((l+1)s-1)! / (ls-2)!  vs  ((l+1)(s+1)-2)! / (2 (l(s+1)-2)!), exactly;
// l >= 3, s >= 2. Both sides are returned doubled to stay integral.
Comparison<BigInt> eq19_sides(std::int64_t ell, std::int64_t s);
bool check_eq19(std::int64_t ell, std::int64_t s);

// psi((l+1)s+1) - psi((l+1)s+s+1)  vs  -1/(l-1); l >= 2, s >= 2.
Comparison<double> eq5_sides(std::int64_t ell, std::int64_t s);
bool check_eq5(std::int64_t ell, std::int64_t s, double margin = kDefaultMargin);

// Derivatives in k at k0 of the gamma-extended sides of
//   C(n+k-r-1, k) >= sum_t C(r-t, k-s) C(n-t+s-1, s-1),
// analytic and by central differences. The right-hand sum runs over the
// terms whose gamma arguments are positive at k0.
struct DerivativeComparison {
  double lhs = 0;
  double rhs = 0;
  double lhs_numeric = 0;
  double rhs_numeric = 0;
};
inline constexpr double kDerivativeStep = 1e-6;
inline constexpr double kDerivativeTolerance = 1e-4;
DerivativeComparison lemma3_derivatives(const RealParams& p);
// lhs > rhs + margin, and each analytic derivative within the relative
// tolerance of its finite difference.
bool check_lemma3_derivative(const RealParams& p, double margin = kDefaultMargin);

// Seeded random points inside each check's hypotheses. About a third of them
// sit just above a multiple of s + 1, where r jumps by one.
std::vector<RealParams> sample_lemma1_points(std::size_t count, std::uint64_t seed);
struct Eq14Point {
  double n;
  std::int64_t s;
};
std::vector<Eq14Point> sample_eq14_points(std::size_t count, std::uint64_t seed);
std::vector<RealParams> sample_lemma3_points(std::size_t count, std::uint64_t seed);

// Grid bounds; unset fields take per-check defaults.
struct AuditGrid {
  std::optional<std::int64_t> max;   // lemma4: common bound on n, s, r
  std::optional<std::int64_t> n_max;
  std::optional<std::int64_t> s_max;
  std::optional<std::int64_t> k_max;
  std::optional<std::int64_t> ell_max;
  std::optional<std::size_t> points;  // random-point checks
  std::uint64_t seed = 20100125;
  double margin = kDefaultMargin;
};

const std::vector<std::string>& check_names();

// Runs the named grid. Throws std::invalid_argument for an unknown name.
AuditReport run(const std::string& name, const AuditGrid& grid,
                sweep::Execution exec = sweep::Execution::Parallel);

}  // namespace hdepth::audit
