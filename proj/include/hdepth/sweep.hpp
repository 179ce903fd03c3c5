#pragma once

// Parameter sweeps. Every grid point is independent, so the drivers map a
// pure function over a point list either serially (the reference path) or
// with an OpenMP parallel loop. Both return results in input order.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <span>
#include <type_traits>
#include <vector>

#include <omp.h>

namespace hdepth::sweep {

enum class Execution { Serial, Parallel };

template <class Point, class Fn>
using MapResult = std::decay_t<std::invoke_result_t<Fn&, const Point&>>;

template <class Point, class Fn>
std::vector<MapResult<Point, Fn>> map_serial(std::span<const Point> points, Fn fn) {
  std::vector<MapResult<Point, Fn>> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(fn(p));
  return out;
}

// Exceptions thrown by fn are collected per point; the one from the lowest
// index is rethrown after the loop.
template <class Point, class Fn>
std::vector<MapResult<Point, Fn>> map_parallel(std::span<const Point> points, Fn fn) {
  const auto count = static_cast<std::int64_t>(points.size());
  std::vector<MapResult<Point, Fn>> out(points.size());
  std::vector<std::exception_ptr> errors(points.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      out[idx] = fn(points[idx]);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

template <class Point, class Fn>
std::vector<MapResult<Point, Fn>> map(std::span<const Point> points, Fn fn, Execution exec) {
  return exec == Execution::Serial ? map_serial(points, std::move(fn)) : map_parallel(points, std::move(fn));
}

int max_threads();

struct PowerDepthRow {
  std::int64_t n = 0;
  std::int64_t s = 0;
  std::int64_t computed = 0;     // hdepth_via_numerator
  std::int64_t closed_form = 0;  // ceil(n / (s + 1))
  std::int64_t via_multiplication = -1;  // -1 unless cross-checked

  bool matches() const { return computed == closed_form && (via_multiplication < 0 || via_multiplication == computed); }
};

// Hilbert depth of the s-th power of the maximal ideal over the grid
// [n_min, n_max] x [s_min, s_max], rows ordered by (n, s).
std::vector<PowerDepthRow> power_depth_table(std::int64_t n_min, std::int64_t n_max, std::int64_t s_min,
                                             std::int64_t s_max, Execution exec, bool cross_check = false);

}  // namespace hdepth::sweep
