#pragma once

#include <cstddef>
#include <functional>

namespace domaincheck {

enum class Exec { Serial, Parallel };

/// Runs fn(i) for i in [0, n). Under Exec::Parallel iterations are spread
/// over OpenMP threads with dynamic scheduling; the first exception thrown by
/// any iteration is rethrown on the calling thread after the loop.
void parallel_for(Exec exec, std::size_t n, const std::function<void(std::size_t)>& fn);

int worker_count();

}  // namespace domaincheck
