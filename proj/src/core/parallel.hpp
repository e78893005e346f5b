#pragma once

#include <cstddef>
#include <functional>

namespace secrecy {

// Worker cap: SECRECY_THREADS if set (clamped to >= 1), else hardware cores.
std::size_t worker_count();

// Runs f(i) for i in [0, n). Results must be written to per-index slots so the
// outcome does not depend on scheduling. Exceptions are rethrown in the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace secrecy
