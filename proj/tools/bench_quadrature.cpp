// Timing comparison of the serial and OpenMP solid-angle kernels, with a
// bit-stability cross-check (identical results required, not just close).

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "emrate/quadrature.hpp"

using namespace emrate;

namespace {

using clock_type = std::chrono::steady_clock;

template <typename Fn>
double time_best_of(int repeats, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = clock_type::now();
    fn();
    const auto t1 = clock_type::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;

#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; parallel path degrades to serial\n");
#endif
  std::printf("%-28s %10s %10s %8s %s\n", "case", "serial[s]", "openmp[s]", "speedup",
              "bit-identical");

  const AtomConfig cfg{1e6, 1.0, 1.0};
  int mismatches = 0;

  for (int n : {64, 128, 256, 512}) {
    const QuadratureSpec spec{n, n};
    volatile double sink = 0.0;

    double serial_val = 0.0, parallel_val = 0.0;
    const double ts = time_best_of(repeats, [&] {
      serial_val = rate_numeric(DipoleAxis::z, cfg, spec, {}, Exec::serial);
      sink = serial_val;
    });
    const double tp = time_best_of(repeats, [&] {
      parallel_val = rate_numeric(DipoleAxis::z, cfg, spec, {}, Exec::parallel);
      sink = parallel_val;
    });
    (void)sink;

    const bool same = serial_val == parallel_val;
    mismatches += same ? 0 : 1;
    char name[64];
    std::snprintf(name, sizeof(name), "rate_numeric %dx%d", n, n);
    std::printf("%-28s %10.4f %10.4f %7.2fx %s\n", name, ts, tp, ts / tp,
                same ? "yes" : "NO");
  }

  for (int n : {256, 512}) {
    const QuadratureSpec spec{n, n};
    double serial_val = 0.0, parallel_val = 0.0;
    const double ts = time_best_of(repeats, [&] {
      serial_val = rate_numeric_fixed(DipoleAxis::y, 5.0, spec, Exec::serial);
    });
    const double tp = time_best_of(repeats, [&] {
      parallel_val = rate_numeric_fixed(DipoleAxis::y, 5.0, spec, Exec::parallel);
    });
    const bool same = serial_val == parallel_val;
    mismatches += same ? 0 : 1;
    char name[64];
    std::snprintf(name, sizeof(name), "rate_numeric_fixed %dx%d", n, n);
    std::printf("%-28s %10.4f %10.4f %7.2fx %s\n", name, ts, tp, ts / tp,
                same ? "yes" : "NO");
  }

  if (mismatches) {
    std::printf("FAIL: %d case(s) differ between serial and parallel\n", mismatches);
    return 1;
  }
  return 0;
}
