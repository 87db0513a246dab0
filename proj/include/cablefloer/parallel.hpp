#pragma once

#include <cstddef>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cf {

/* Thread count for the parallel kernels.  CABLEFLOER_THREADS (>=1) overrides
 * the OpenMP default; anything unparsable is ignored. */
inline int thread_count()
{
#ifdef _OPENMP
    int n = omp_get_max_threads();
#else
    int n = 1;
#endif
    if (const char* env = std::getenv("CABLEFLOER_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1)
            n = static_cast<int>(v);
    }
    return n;
}

/* Static-schedule parallel loop writing into preassigned slots; the result is
 * a pure function of the index so output never depends on the thread count. */
template <typename F>
void parallel_for(std::size_t count, int threads, F&& body)
{
#ifdef _OPENMP
    if (threads > 1) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            body(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)threads;
#endif
    for (std::size_t i = 0; i < count; ++i)
        body(i);
}

}  // namespace cf
