#pragma once

#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace csmlap {

// How a data-parallel kernel is executed. `automatic` picks OpenMP when it
// is compiled in and the iteration count warrants it; `serial` forces the
// reference path; `parallel` forces the OpenMP path (falls back to serial
// in builds without OpenMP).
enum class ExecMode { automatic, serial, parallel };

inline int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline constexpr bool has_openmp() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

// Runs fn(i) for i in [0, count). Iterations must be independent; results
// must be combined in an order-independent way by the caller. Exceptions
// thrown by workers are captured and the first one is rethrown on the
// calling thread.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn, ExecMode mode = ExecMode::automatic) {
#ifdef _OPENMP
  if (mode != ExecMode::serial && count > 1) {
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(csmlap_parallel_for_err)
        {
          if (!err) err = std::current_exception();
        }
      }
    }
    if (err) std::rethrow_exception(err);
    return;
  }
#else
  (void)mode;
#endif
  for (std::size_t i = 0; i < count; ++i) fn(i);
}

}  // namespace csmlap
