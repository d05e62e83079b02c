#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ty {

// Global thread budget. 0 means "use the OpenMP default"; 1 forces the
// serial path (used by tests to compare against parallel runs).
inline int& thread_limit() {
  static int limit = [] {
    if (const char* e = std::getenv("TY_THREADS")) {
      int v = std::atoi(e);
      if (v >= 0) return v;
    }
    return 0;
  }();
  return limit;
}

inline int effective_threads() {
#ifdef _OPENMP
  int lim = thread_limit();
  int hw = omp_get_max_threads();
  if (lim <= 0) return hw;
  return lim < hw ? lim : hw;
#else
  return 1;
#endif
}

// Runs fn(i) for i in [0, n). Tasks must be independent; exceptions are
// captured and the first one is rethrown on the calling thread.
template <class Fn>
void parallel_for(long n, Fn&& fn) {
  if (n <= 0) return;
  int threads = effective_threads();
  if (threads <= 1 || n == 1) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
#ifdef _OPENMP
  std::exception_ptr err = nullptr;
  std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long i = 0; i < n; ++i) {
    if (failed.load(std::memory_order_relaxed)) continue;
    try {
      fn(i);
    } catch (...) {
#pragma omp critical(ty_parallel_for_err)
      {
        if (!failed.exchange(true)) err = std::current_exception();
      }
    }
  }
  if (err) std::rethrow_exception(err);
#else
  for (long i = 0; i < n; ++i) fn(i);
#endif
}

}  // namespace ty
