#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "vfa/decode.hpp"
#include "vfa/parallel.hpp"
#include "vfa/shaping.hpp"

using namespace vfa;

namespace {

template <typename Fn>
double seconds(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-24s serial %7.3fs   parallel %7.3fs   speedup %.2fx\n",
                name, serial, parallel, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t trials = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 64;
    std::printf("threads available: %d, trials: %zu\n", max_threads(), trials);

    FpeEncoder enc = FpeEncoder::sample_base(PhaseDistribution::uniform(),
                                             Family::hadamard, 2048, 1);
    auto grid = linspace(-5.0, 5.0, 0.05);
    report("estimate_kernel",
           seconds([&] { estimate_kernel(enc, grid, trials, 7, false); }),
           seconds([&] { estimate_kernel(enc, grid, trials, 7, true); }));

    MultiEncoder enc2 = MultiEncoder::cartesian(
        {enc, FpeEncoder::sample_base(PhaseDistribution::uniform(),
                                      Family::hadamard, 2048, 2)});
    auto grid2 = linspace(-3.0, 3.0, 0.25);
    report("estimate_kernel_2d",
           seconds([&] {
               estimate_kernel_2d(enc2, grid2, grid2, trials / 4, 7, false);
           }),
           seconds([&] {
               estimate_kernel_2d(enc2, grid2, grid2, trials / 4, 7, true);
           }));

    report("decode_point_sweep",
           seconds([&] {
               decode_point_sweep({0.0, 10.0}, {256}, trials, 7, 1.6, 20,
                                  false);
           }),
           seconds([&] {
               decode_point_sweep({0.0, 10.0}, {256}, trials, 7, 1.6, 20,
                                  true);
           }));
    return 0;
}
