#include "padecheb/parallel.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace padecheb {

int thread_limit() {
    if (const char *env = std::getenv("PADECHEB_THREADS")) {
        try {
            const int requested = std::stoi(env);
            if (requested > 0)
                return requested;
        } catch (const std::exception &) {
            // unparsable value: fall through to the OpenMP default
        }
    }
    return omp_get_max_threads();
}

} // namespace padecheb
