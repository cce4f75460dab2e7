#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>

#include <Eigen/Dense>

#include "vfa/fpe.hpp"

namespace vfa {

/// Projection directions of the hexagonal frame; xi[0] + xi[1] + xi[2] = 0.
inline constexpr std::array<std::array<double, 2>, 3> hex_xi{{
    {0.25, 0.4330127018922193},
    {0.25, -0.4330127018922193},
    {-0.5, 0.0},
}};

/// Analytic hexagonal sinc kernel
///   (1/3) sum_i cos(pi xi_i.x) sinc(xi_{i+1}.x) sinc(xi_{i+2}.x)
/// with sinc(u) = sin(pi u) / (pi u).
double sinc_hex(double x, double y);

/// Jointly sampled 2-D base phases, one (x, y) pair per component.
struct PhasePair {
    PhaseVector x, y;
};

/// n points uniform in the hexagon inscribed in [-pi, pi]^2 whose spectral
/// support matches the Brillouin zone of the hex_xi frame: flat-top hexagon
/// with vertices (+-pi, 0), (+-pi/2, +-sqrt(3)/2 pi). Rejection sampling
/// from the bounding square; acceptance rate is area / (2 pi)^2 = 3√3/8.
PhasePair hexagon_joint_phases(std::size_t n, std::uint64_t seed);

bool inside_hexagon(double x, double y);

/// Phases drawn from the points i*b1 + j*b2 (|i|,|j| <= extent) that fall in
/// [-pi, pi]^2, optionally weighted per kept point and smeared by isotropic
/// Gaussian noise of std smear_sigma (clipped back to [-pi, pi]).
PhasePair lattice_phases(const std::array<double, 2>& b1,
                         const std::array<double, 2>& b2, int extent,
                         std::size_t n, std::uint64_t seed,
                         const std::vector<double>& weights = {},
                         double smear_sigma = 0.0);

/// Multi-dimensional encoder. Modes:
///   cartesian          bind of m independent 1-D encoders
///   joint2d            hadamard phasors with jointly sampled 2-D phases
///   hex_concat         length-3n concatenation of the three hexagonal
///                      projection blocks e^{i pi x_i} z1(x_{i+1}) z2(x_{i+2})
///   hex_cc_projection  bind of three circular encoders at the projections
class MultiEncoder {
  public:
    enum class Mode { cartesian, joint2d, hex_concat, hex_cc_projection };

    /// sampler(n, seed) -> fresh jointly sampled phase pairs.
    using JointSampler =
        std::function<PhasePair(std::size_t, std::uint64_t)>;

    static MultiEncoder cartesian(std::vector<FpeEncoder> parts);
    static MultiEncoder joint2d(std::size_t n, JointSampler sampler,
                                std::uint64_t seed);
    static MultiEncoder hex_concat(FpeEncoder z1, FpeEncoder z2);
    static MultiEncoder hex_cc_projection(FpeEncoder e1, FpeEncoder e2,
                                          FpeEncoder e3);

    HDVector encode(const std::vector<double>& point) const;

    std::size_t arity() const;
    /// Length of the encoded vector.
    std::size_t dim() const;
    Mode mode() const { return mode_; }
    std::string mode_name() const;
    const std::vector<FpeEncoder>& parts() const { return parts_; }
    const PhasePair& joint_phases() const { return joint_; }

    MultiEncoder resample(std::uint64_t seed) const;

  private:
    MultiEncoder() = default;

    Mode mode_ = Mode::cartesian;
    std::vector<FpeEncoder> parts_;
    PhasePair joint_;
    JointSampler sampler_;
    std::size_t joint_n_ = 0;
};

HDVector encode_multi(const MultiEncoder& enc,
                      const std::vector<double>& point);

/// Smolensky tensor-product reference: z1(x) conj(z2(y))^T. Both encoders
/// must be hadamard.
Eigen::MatrixXcd tensor_encode(const FpeEncoder& encX, const FpeEncoder& encY,
                               double x, double y);

/// Frobenius inner product normalized by the entry count, so the
/// self-similarity of a tensor encoding is 1.
cplx tensor_inner(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// Trial-averaged 2-D kernel on a displacement grid plus its normalized
/// power spectrum.
struct Kernel2DEstimate {
    std::vector<double> dx, dy;
    std::vector<double> mean;   // row-major, dx index major
    std::vector<double> power;  // |2-D DFT of mean|^2, normalized to sum 1
    std::size_t n = 0;
    std::size_t trials = 0;
    std::string mode;

    double mean_at(std::size_t i, std::size_t j) const {
        return mean[i * dy.size() + j];
    }
    double power_at(std::size_t i, std::size_t j) const {
        return power[i * dy.size() + j];
    }
};

Kernel2DEstimate estimate_kernel_2d(const MultiEncoder& proto,
                                    const std::vector<double>& dx,
                                    const std::vector<double>& dy,
                                    std::size_t trials, std::uint64_t base_seed,
                                    bool parallel = true);

}  // namespace vfa
