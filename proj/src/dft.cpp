#include "vfa/dft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace vfa {
namespace {

// FFTW planning is not thread-safe; execution via fftw_execute_dft is.
// Plans are cached per (size, direction) and created with FFTW_ESTIMATE |
// FFTW_UNALIGNED so they can run on arbitrary caller buffers.
class PlanCache {
  public:
    fftw_plan get(std::size_t n, int sign) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto key = std::make_pair(n, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        cvec scratch(n);
        auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
        fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, sign,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_.emplace(key, p);
        return p;
    }

  private:
    std::mutex mutex_;
    std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

}  // namespace

void dft_forward(cplx* data, std::size_t n) {
    if (n <= 1) return;
    auto* buf = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(cache().get(n, FFTW_FORWARD), buf, buf);
}

void dft_inverse(cplx* data, std::size_t n) {
    if (n <= 1) return;
    auto* buf = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(cache().get(n, FFTW_BACKWARD), buf, buf);
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) data[i] *= scale;
}

void dft_forward(cvec& v) { dft_forward(v.data(), v.size()); }
void dft_inverse(cvec& v) { dft_inverse(v.data(), v.size()); }

}  // namespace vfa
