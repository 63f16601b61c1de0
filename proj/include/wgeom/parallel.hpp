#pragma once

#include <cstdint>

namespace wgeom {

// Reference loop; kept separate so tests and benchmarks can compare the
// parallel kernels against it.
template <class F>
void serial_for(std::int64_t n, F&& fn) {
  for (std::int64_t i = 0; i < n; ++i) fn(i);
}

#ifdef WGEOM_HAVE_OPENMP
template <class F>
void parallel_for(std::int64_t n, F&& fn) {
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) fn(i);
}
#else
template <class F>
void parallel_for(std::int64_t n, F&& fn) {
  serial_for(n, fn);
}
#endif

}  // namespace wgeom
