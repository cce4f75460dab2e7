#include "vfa/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace vfa {

int max_threads() {
    int nt = omp_get_max_threads();
    if (const char* env = std::getenv("VFA_THREADS")) {
        try {
            int cap = std::stoi(env);
            if (cap >= 1 && cap < nt) nt = cap;
        } catch (const std::exception&) {
            // ignore malformed values
        }
    }
    return nt;
}

void run_trials(std::size_t count, bool parallel,
                const std::function<void(std::size_t)>& body) {
    if (!parallel || max_threads() == 1) {
        for (std::size_t t = 0; t < count; ++t) body(t);
        return;
    }
    const int nt = max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (long long t = 0; t < static_cast<long long>(count); ++t)
        body(static_cast<std::size_t>(t));
}

}  // namespace vfa
