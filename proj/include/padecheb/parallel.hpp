#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace padecheb {

/// Selects the serial reference loop or the OpenMP loop for data-parallel kernels.
/// Both produce identical results; the serial path exists for testing and profiling.
enum class Execution { serial, parallel };

/// Thread cap for parallel kernels: PADECHEB_THREADS when set to a positive
/// integer, otherwise the OpenMP default.
int thread_limit();

/// Runs body(i) for i in [0, n). In parallel mode the first exception by index is
/// rethrown after the loop finishes, so error reporting matches the serial loop.
template <class Body>
void for_each_index(std::size_t n, Execution exec, Body &&body) {
    if (exec == Execution::serial || n < 2) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::exception_ptr first_error;
    std::size_t first_index = n;
    std::mutex guard;
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic) num_threads(thread_limit())
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard lock(guard);
            if (static_cast<std::size_t>(i) < first_index) {
                first_index = static_cast<std::size_t>(i);
                first_error = std::current_exception();
            }
        }
    }
    if (first_error)
        std::rethrow_exception(first_error);
}

} // namespace padecheb
