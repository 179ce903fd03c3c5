#pragma once

// Hilbert depth of a positive rational series Q(T) / (1 - T)^n, computed two
// independent ways, and a witness decomposition
//   H(T) = sum_{e=d}^{n} Q_e(T) / (1 - T)^e   with all Q_e >= 0.

#include "hdepth/series.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace hdepth {

// The input has a negative coefficient (or is zero), so it is not the Hilbert
// series of any nonzero module.
class NotAHilbertSeries : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A step that existence guarantees say cannot fail did fail.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct DecompositionPart {
  std::int64_t level;
  LaurentPolynomial numerator;

  friend bool operator==(const DecompositionPart&, const DecompositionPart&) = default;
};

struct HilbertDecomposition {
  std::int64_t min_level = 0;
  std::vector<DecompositionPart> parts;  // strictly increasing levels
};

struct DepthReport {
  std::int64_t hdepth;
  // Q / (1 - T)^(n - hdepth) is positive.
  PositivityCertificate certificate_at_depth;
  // Q / (1 - T)^(n - hdepth - 1) is not; absent when hdepth == n.
  std::optional<PositivityCertificate> certificate_above_depth;
  std::optional<HilbertDecomposition> decomposition;
};

// n - min{q : Q / (1 - T)^q positive}, by binary search over q.
// Throws NotAHilbertSeries if Q == 0 or the series itself is not positive.
DepthReport hdepth_via_numerator(const RationalSeries& rs);

// max{p : (1 - T)^p H(T) positive}, testing the multiplied numerator over the
// full denominator (1 - T)^n.
std::int64_t hdepth_via_multiplication(const RationalSeries& rs);

struct DecomposeOptions {
  // Overrides the per-level search ceiling for the extracted monomial's
  // exponent. Default: top degree + 4 (i + 1) (1 + max |coefficient|).
  std::optional<Degree> search_ceiling;
};

// Peels off one monomial sigma_i T^j per pole order, taking the smallest j
// that keeps the remainder positive, so that the remaining numerator is
// divisible by (1 - T). Throws NotAHilbertSeries for non-positive input and
// InternalInconsistency if no admissible j is found below the ceiling.
HilbertDecomposition decompose(const RationalSeries& rs, const DecomposeOptions& options = {});

// All numerators nonzero with nonnegative coefficients, levels strictly
// increasing within [0, n], min_level equal to the first level, and
// sum_e Q_e (1 - T)^(n - e) == Q exactly.
bool verify_decomposition(const HilbertDecomposition& dec, const RationalSeries& rs);

}  // namespace hdepth
