#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace vfa {

/// Counter-style 64-bit PRNG (splitmix64, Vigna 2015). Stateless apart from
/// a counter, so streams can be split by seed arithmetic: trial t of any
/// experiment uses seed base_seed ^ t.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    /// Uniform phase in [-pi, pi).
    double uniform_phase() {
        return uniform(-std::numbers::pi, std::numbers::pi);
    }

    std::uint64_t uniform_index(std::uint64_t n) { return next_u64() % n; }

    /// Standard normal via Box-Muller.
    double gaussian() {
        double u1 = next_double();
        double u2 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

    static std::uint64_t trial_seed(std::uint64_t base, std::uint64_t trial) {
        return base ^ trial;
    }

  private:
    std::uint64_t state_;
};

}  // namespace vfa
