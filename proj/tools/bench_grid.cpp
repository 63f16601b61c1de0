// Compares the parallel grid kernels against the serial reference on a
// volume/area/quotient sweep and reports timings plus the max deviation.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "wgeom/comparison.hpp"
#include "wgeom/parallel.hpp"

using namespace wgeom;

namespace {

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(
             clock::now().time_since_epoch())
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 512;
  WeightedModelSpace S(3, space_form_warping(-1.0), parse_profile("0 - r^2"));
  std::vector<double> radii = default_radii(0.05, 10.0, n);

  std::vector<double> serial(radii.size()), parallel(radii.size());

  const double t0 = now_ms();
  serial_for(static_cast<std::int64_t>(radii.size()), [&](std::int64_t i) {
    serial[i] = iso_quotient(S, radii[i]) + volume_ball(S, radii[i]);
  });
  const double t1 = now_ms();
  parallel_for(static_cast<std::int64_t>(radii.size()), [&](std::int64_t i) {
    parallel[i] = iso_quotient(S, radii[i]) + volume_ball(S, radii[i]);
  });
  const double t2 = now_ms();

  double max_dev = 0.0;
  for (size_t i = 0; i < radii.size(); ++i)
    max_dev = std::max(max_dev, std::abs(serial[i] - parallel[i]));

  std::printf("grid=%d serial=%.1fms parallel=%.1fms speedup=%.2fx max_dev=%.3g\n",
              n, t1 - t0, t2 - t1, (t1 - t0) / std::max(1e-9, t2 - t1),
              max_dev);
  return max_dev == 0.0 ? 0 : 1;
}
