#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ecdc {

/// Execution mode for grid sweeps. Serial is the reference path; parallel
/// results are bit-identical because reductions are done afterwards in
/// index order.
enum class Exec { kSerial, kParallel };

/// out[i] = fn(i) for i in [0, n).
template <class T, class Fn>
std::vector<T> map_index(std::size_t n, Fn&& fn, Exec exec) {
  std::vector<T> out(n);
  if (exec == Exec::kSerial || n < 64) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::exception_ptr err;
  std::mutex err_mu;
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(err_mu);
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

inline int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace ecdc
