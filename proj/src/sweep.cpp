#include "hdepth/sweep.hpp"

#include "hdepth/catalog.hpp"
#include "hdepth/depth.hpp"
#include "hdepth/power_theorem.hpp"

#include <stdexcept>

namespace hdepth::sweep {

int max_threads() { return omp_get_max_threads(); }

std::vector<PowerDepthRow> power_depth_table(std::int64_t n_min, std::int64_t n_max, std::int64_t s_min,
                                             std::int64_t s_max, Execution exec, bool cross_check) {
  if (n_min < 1 || s_min < 1 || n_max < n_min || s_max < s_min) {
    throw std::invalid_argument("power_depth_table: need 1 <= n_min <= n_max and 1 <= s_min <= s_max");
  }
  std::vector<PowerIdealParams> grid;
  for (std::int64_t n = n_min; n <= n_max; ++n)
    for (std::int64_t s = s_min; s <= s_max; ++s) grid.emplace_back(n, s);

  auto row = [cross_check](const PowerIdealParams& p) {
    const RationalSeries series = power_ideal_series(p);
    PowerDepthRow r;
    r.n = p.n;
    r.s = p.s;
    r.computed = hdepth_via_numerator(series).hdepth;
    r.closed_form = hdepth_power_closed_form(p);
    if (cross_check) r.via_multiplication = hdepth_via_multiplication(series);
    return r;
  };
  return map(std::span<const PowerIdealParams>(grid), row, exec);
}

}  // namespace hdepth::sweep
