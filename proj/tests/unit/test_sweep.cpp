#include "hdepth/sweep.hpp"

#include <doctest.h>

#include <numeric>
#include <stdexcept>

using namespace hdepth::sweep;

TEST_CASE("map preserves order in both modes") {
  std::vector<int> points(1000);
  std::iota(points.begin(), points.end(), 0);
  const auto square = [](const int& x) { return static_cast<long>(x) * x; };
  const auto a = map(std::span<const int>(points), square, Execution::Serial);
  const auto b = map(std::span<const int>(points), square, Execution::Parallel);
  CHECK(a == b);
  CHECK(b[999] == 998001);
  CHECK(max_threads() >= 1);
}

TEST_CASE("parallel map rethrows the lowest-index exception") {
  std::vector<int> points(200);
  std::iota(points.begin(), points.end(), 0);
  const auto fn = [](const int& x) -> int {
    if (x == 37) throw std::runtime_error("37");
    if (x == 150) throw std::logic_error("150");
    return x;
  };
  try {
    map_parallel(std::span<const int>(points), fn);
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()) == "37");
  }
}

TEST_CASE("power depth table, serial and parallel") {
  const auto serial = power_depth_table(1, 30, 1, 5, Execution::Serial, true);
  const auto parallel = power_depth_table(1, 30, 1, 5, Execution::Parallel, true);
  REQUIRE(serial.size() == 150);
  REQUIRE(parallel.size() == 150);
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].n == parallel[i].n);
    CHECK(serial[i].s == parallel[i].s);
    CHECK(serial[i].computed == parallel[i].computed);
    CHECK(serial[i].matches());
    CHECK(serial[i].via_multiplication == serial[i].computed);
  }
  CHECK(serial[1].n == 1);
  CHECK(serial[1].s == 2);
  CHECK_THROWS_AS(power_depth_table(3, 2, 1, 1, Execution::Serial), std::invalid_argument);
  CHECK(power_depth_table(7, 7, 2, 2, Execution::Serial)[0].via_multiplication == -1);
}
