#pragma once

#include <cstdint>
#include <exception>
#include <mutex>
#include <vector>

namespace imcsim {

// Execution policy for the search / sweep kernels. The serial path is the
// reference; the parallel path must produce bit-identical results.
enum class Exec { Serial, Parallel };

int max_threads();
// No-op when built without OpenMP.
void set_num_threads(int n);

// out[i] = fn(i) for i in [0, n). Results land in index order whatever the
// schedule; the first exception thrown by any task is rethrown.
template <class T, class Fn>
std::vector<T> indexed_map(std::size_t n, Fn&& fn, Exec exec) {
  std::vector<T> out(n);
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace imcsim
