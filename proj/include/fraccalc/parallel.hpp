#ifndef FRACCALC_PARALLEL_HPP
#define FRACCALC_PARALLEL_HPP

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fraccalc {

/// Apply FRACCALC_THREADS (0 or unset = all cores). Call once at startup.
inline void configure_threads() {
#ifdef _OPENMP
    if (const char* env = std::getenv("FRACCALC_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) omp_set_num_threads(n);
    }
#endif
}

} // namespace fraccalc

#endif
