#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace reskit {

// Kernels come in two flavors: a serial reference implementation and an
// OpenMP one. Both must produce identical results; tests compare them.
enum class Exec { Serial, Parallel };

// Thread count used by parallel kernels. Capped by the RESKIT_THREADS
// environment variable (0 or unset = OpenMP default), read once.
int par_threads();

template <class F>
void par_for(std::size_t n, F&& body, Exec mode = Exec::Parallel) {
#ifdef _OPENMP
  if (mode == Exec::Parallel && n > 1 && par_threads() > 1) {
    std::exception_ptr err = nullptr;
    std::atomic<bool> failed{false};
    const int nt = par_threads();
#pragma omp parallel for schedule(static) num_threads(nt)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      if (failed.load(std::memory_order_relaxed)) continue;
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        bool expected = false;
        if (failed.compare_exchange_strong(expected, true))
          err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

// max of body(i) over i in [0, n); -inf for n = 0. The max reduction is
// order-independent, so serial and parallel runs agree bitwise.
template <class F>
double par_max(std::size_t n, F&& body, Exec mode = Exec::Parallel) {
  double result = -std::numeric_limits<double>::infinity();
#ifdef _OPENMP
  if (mode == Exec::Parallel && n > 1 && par_threads() > 1) {
    std::exception_ptr err = nullptr;
    std::atomic<bool> failed{false};
    const int nt = par_threads();
#pragma omp parallel for schedule(static) num_threads(nt) reduction(max : result)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      if (failed.load(std::memory_order_relaxed)) continue;
      try {
        const double v = body(static_cast<std::size_t>(i));
        if (v > result) result = v;
      } catch (...) {
        bool expected = false;
        if (failed.compare_exchange_strong(expected, true))
          err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
    return result;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) {
    const double v = body(i);
    if (v > result) result = v;
  }
  return result;
}

}  // namespace reskit
