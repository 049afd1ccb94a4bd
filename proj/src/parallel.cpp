#include "domaincheck/parallel.hpp"

#include <exception>
#include <mutex>

#include <omp.h>

namespace domaincheck {

void parallel_for(Exec exec, std::size_t n, const std::function<void(std::size_t)>& fn) {
  if (exec == Exec::Serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr first;
  std::mutex guard;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(guard);
      if (!first) first = std::current_exception();
    }
  }
  if (first) std::rethrow_exception(first);
}

int worker_count() { return omp_get_max_threads(); }

}  // namespace domaincheck
