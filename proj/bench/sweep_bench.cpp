// Serial reference path against the OpenMP path on the power-ideal table.
// Usage: sweep_bench [n_max] [s_max] [repeats]

#include "hdepth/sweep.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>

int main(int argc, char** argv) {
  using hdepth::sweep::Execution;
  const std::int64_t n_max = argc > 1 ? std::atoll(argv[1]) : 120;
  const std::int64_t s_max = argc > 2 ? std::atoll(argv[2]) : 8;
  const int repeats = argc > 3 ? std::atoi(argv[3]) : 3;

  auto time = [&](Execution exec) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
      const auto start = std::chrono::steady_clock::now();
      const auto rows = hdepth::sweep::power_depth_table(1, n_max, 1, s_max, exec, true);
      const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      for (const auto& r : rows)
        if (!r.matches()) {
          std::fprintf(stderr, "mismatch at n=%lld s=%lld\n", static_cast<long long>(r.n), static_cast<long long>(r.s));
          std::exit(1);
        }
      if (t < best) best = t;
    }
    return best;
  };

  const double serial = time(Execution::Serial);
  const double parallel = time(Execution::Parallel);
  std::printf("grid n <= %lld, s <= %lld, best of %d\n", static_cast<long long>(n_max), static_cast<long long>(s_max),
              repeats);
  std::printf("serial    %.3fs\n", serial);
  std::printf("parallel  %.3fs  (%d threads, speedup %.2fx)\n", parallel, hdepth::sweep::max_threads(),
              serial / parallel);
  return 0;
}
