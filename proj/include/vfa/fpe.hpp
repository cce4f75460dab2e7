#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "vfa/core.hpp"
#include "vfa/rng.hpp"

namespace vfa {

/// One-dimensional phase density on [-pi, pi). Sampling it per base-vector
/// component shapes the similarity kernel: the kernel is the characteristic
/// function of this density (Bochner construction).
class PhaseDistribution {
  public:
    enum class Kind {
        uniform,
        gaussian,
        laplace,
        triangular,
        custom,
        discrete_roots,
        discrete_set,
    };

    static PhaseDistribution uniform();
    static PhaseDistribution gaussian(double sigma);
    static PhaseDistribution laplace(double b);
    static PhaseDistribution triangular(double half_width);
    /// Density table over [-pi, pi]; must be non-negative and integrate to 1
    /// within 1e-6 (trapezoid rule). Sampled by inverse CDF over a 4096-bin
    /// table with linear interpolation.
    static PhaseDistribution custom(std::vector<double> phi,
                                    std::vector<double> density);
    /// Phases uniformly on the l-th roots of unity; yields a kernel with
    /// period l.
    static PhaseDistribution discrete_roots(int l);
    static PhaseDistribution discrete_set(std::vector<double> phases,
                                          std::vector<double> weights);

    /// Parse "uniform", "gaussian:1.0", "laplace:1", "triangular:3.14",
    /// "discrete_roots:8", "truncsinc:2".
    static PhaseDistribution parse(const std::string& spec);

    Kind kind() const { return kind_; }
    std::string name() const;
    /// Kernel period implied by the phase discretization, if any.
    std::optional<double> period() const;

    double sample(Rng& rng) const;

    /// Characteristic function E[cos(phi * d)] of the density actually
    /// sampled, evaluated by quadrature (or exact summation for discrete
    /// kinds). This is the analytic kernel target for this distribution.
    double kernel_target(double d) const;

  private:
    PhaseDistribution() = default;
    void build_cdf_table();

    Kind kind_ = Kind::uniform;
    double param_ = 0.0;
    std::vector<double> phi_, density_;   // custom / quadrature grid
    std::vector<double> cdf_;             // inverse-CDF sampling table
    std::vector<double> atoms_, weights_; // discrete kinds (weights cumulative)
    int roots_ = 0;
    std::string name_;
};

/// Density table for the kernel |sinc(a*x)| truncated to [-pi, pi],
/// normalized (the "complex shape" example density).
PhaseDistribution truncated_abs_sinc_distribution(double a);

/// Fractional power encoder: maps a real scalar to a family-unitary
/// hypervector; inner products of encodings realize the kernel implied by
/// the base phase distribution.
class FpeEncoder {
  public:
    /// Samples a base vector. Phases live in the signal domain for hadamard
    /// and in the (per-block) Fourier domain for circular/block. For the
    /// block family with a uniform distribution the base is an exactly
    /// k-sparse phasor (random hot index plus uniform phase per block).
    /// real_valued enforces Hermitian symmetry (circular family only).
    static FpeEncoder sample_base(const PhaseDistribution& dist, Family family,
                                  std::size_t n, std::uint64_t seed,
                                  std::size_t block_count = 0,
                                  bool real_valued = false);

    HDVector encode(double r) const;

    Family family() const { return family_; }
    std::size_t dim() const { return n_; }
    std::size_t block_count() const { return blocks_; }
    const PhaseVector& base_phases() const { return phases_; }
    const PhaseDistribution& distribution() const { return dist_; }
    std::optional<double> period() const { return period_; }
    std::uint64_t seed() const { return seed_; }
    bool real_valued() const { return real_valued_; }

    /// Fresh encoder with the same configuration but a new seed.
    FpeEncoder resample(std::uint64_t seed) const;

    bool same_config(const FpeEncoder& other) const;

  private:
    FpeEncoder(Family family, std::size_t n, std::size_t blocks,
               PhaseVector phases, PhaseDistribution dist,
               std::optional<double> period, std::uint64_t seed,
               bool real_valued)
        : family_(family), n_(n), blocks_(blocks), phases_(std::move(phases)),
          dist_(std::move(dist)), period_(period), seed_(seed),
          real_valued_(real_valued) {}

    Family family_;
    std::size_t n_;
    std::size_t blocks_;
    PhaseVector phases_;
    PhaseDistribution dist_;
    std::optional<double> period_;
    std::uint64_t seed_;
    bool real_valued_;
};

/// Empirical kernel on a displacement grid with per-point trial statistics.
struct KernelEstimate {
    std::vector<double> d;
    std::vector<double> mean;       // Re of the normalized inner product
    std::vector<double> stddev;     // across trials
    std::vector<double> imag_mean;  // recorded separately
    std::size_t n = 0;
    std::size_t trials = 0;
    std::string family;
    std::string dist;
};

/// Mean over `trials` fresh encoders (trial t seeded seed ^ t) of
/// Re(inner(encode(d), encode(0))). Trials run in parallel when `parallel`;
/// accumulation is in fixed trial order, so serial and parallel results are
/// bit-identical.
KernelEstimate estimate_kernel(const FpeEncoder& proto,
                               const std::vector<double>& d_grid,
                               std::size_t trials, std::uint64_t base_seed,
                               bool parallel = true);

double kernel_rmse(const KernelEstimate& est,
                   const std::function<double(double)>& target);
double kernel_rmse(const KernelEstimate& a, const KernelEstimate& b);

std::vector<double> linspace(double lo, double hi, double step);

}  // namespace vfa
