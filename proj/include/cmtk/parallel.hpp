#pragma once

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cmtk {

// Worker count for the OpenMP kernels: an explicit request wins, then the
// CMTK_THREADS environment variable, then whatever OpenMP offers. Always at
// least 1. Builds without OpenMP run everything serially.
inline int effective_threads(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CMTK_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace cmtk
