#include "vfa/shaping.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vfa/dft.hpp"
#include "vfa/parallel.hpp"

namespace vfa {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = 1.7320508075688772;

double sinc_n(double u) { return u == 0.0 ? 1.0 : std::sin(kPi * u) / (kPi * u); }

double dot2(const std::array<double, 2>& a, double x, double y) {
    return a[0] * x + a[1] * y;
}

}  // namespace

double sinc_hex(double x, double y) {
    double p[3] = {dot2(hex_xi[0], x, y), dot2(hex_xi[1], x, y),
                   dot2(hex_xi[2], x, y)};
    double acc = 0.0;
    for (int i = 0; i < 3; ++i)
        acc += std::cos(kPi * p[i]) * sinc_n(p[(i + 1) % 3]) *
               sinc_n(p[(i + 2) % 3]);
    return acc / 3.0;
}

bool inside_hexagon(double x, double y) {
    // Flat-top hexagon, vertices (+-pi, 0) and (+-pi/2, +-sqrt(3)/2 pi).
    return std::abs(y) <= kSqrt3 * 0.5 * kPi + 1e-12 &&
           kSqrt3 * std::abs(x) + std::abs(y) <= kSqrt3 * kPi + 1e-12;
}

PhasePair hexagon_joint_phases(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        double x, y;
        do {
            x = rng.uniform_phase();
            y = rng.uniform_phase();
        } while (!inside_hexagon(x, y));
        xs[i] = x;
        ys[i] = y;
    }
    return {PhaseVector(std::move(xs)), PhaseVector(std::move(ys))};
}

PhasePair lattice_phases(const std::array<double, 2>& b1,
                         const std::array<double, 2>& b2, int extent,
                         std::size_t n, std::uint64_t seed,
                         const std::vector<double>& weights,
                         double smear_sigma) {
    std::vector<std::array<double, 2>> pts;
    for (int i = -extent; i <= extent; ++i)
        for (int j = -extent; j <= extent; ++j) {
            double x = i * b1[0] + j * b2[0];
            double y = i * b1[1] + j * b2[1];
            if (std::abs(x) <= kPi + 1e-12 && std::abs(y) <= kPi + 1e-12)
                pts.push_back({x, y});
        }
    if (pts.empty())
        throw EmptyLattice("no lattice points fall inside [-pi, pi]^2");
    if (!weights.empty() && weights.size() != pts.size())
        throw LengthMismatch("weights must match the kept lattice points");

    std::vector<double> cum;
    if (!weights.empty()) {
        double total = 0.0;
        for (double w : weights) {
            if (w < 0.0) throw InvalidDensity("lattice weights must be >= 0");
            total += w;
        }
        if (total <= 0.0) throw InvalidDensity("lattice weights sum to 0");
        cum.reserve(weights.size());
        double acc = 0.0;
        for (double w : weights) cum.push_back(acc += w / total);
        cum.back() = 1.0;
    }

    Rng rng(seed);
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t idx;
        if (cum.empty()) {
            idx = rng.uniform_index(pts.size());
        } else {
            double u = rng.next_double();
            idx = std::lower_bound(cum.begin(), cum.end(), u) - cum.begin();
        }
        double x = pts[idx][0], y = pts[idx][1];
        if (smear_sigma > 0.0) {
            x = std::clamp(x + smear_sigma * rng.gaussian(), -kPi, kPi);
            y = std::clamp(y + smear_sigma * rng.gaussian(), -kPi, kPi);
        }
        xs[i] = x;
        ys[i] = y;
    }
    return {PhaseVector(std::move(xs)), PhaseVector(std::move(ys))};
}

MultiEncoder MultiEncoder::cartesian(std::vector<FpeEncoder> parts) {
    if (parts.empty())
        throw ArityMismatch("cartesian encoder needs at least one part");
    for (const auto& p : parts)
        if (p.dim() != parts.front().dim() ||
            p.family() != parts.front().family() ||
            p.block_count() != parts.front().block_count())
            throw EncoderMismatch("cartesian parts must share n and family");
    MultiEncoder e;
    e.mode_ = Mode::cartesian;
    e.parts_ = std::move(parts);
    return e;
}

MultiEncoder MultiEncoder::joint2d(std::size_t n, JointSampler sampler,
                                   std::uint64_t seed) {
    MultiEncoder e;
    e.mode_ = Mode::joint2d;
    e.joint_ = sampler(n, seed);
    e.sampler_ = std::move(sampler);
    e.joint_n_ = n;
    if (e.joint_.x.size() != n || e.joint_.y.size() != n)
        throw LengthMismatch("joint sampler returned the wrong count");
    return e;
}

MultiEncoder MultiEncoder::hex_concat(FpeEncoder z1, FpeEncoder z2) {
    if (z1.family() != Family::hadamard || z2.family() != Family::hadamard)
        throw EncoderMismatch("hex_concat uses hadamard encoders");
    if (z1.dim() != z2.dim())
        throw EncoderMismatch("hex_concat encoders must share n");
    MultiEncoder e;
    e.mode_ = Mode::hex_concat;
    e.parts_.push_back(std::move(z1));
    e.parts_.push_back(std::move(z2));
    return e;
}

MultiEncoder MultiEncoder::hex_cc_projection(FpeEncoder e1, FpeEncoder e2,
                                             FpeEncoder e3) {
    for (const FpeEncoder* p : {&e1, &e2, &e3})
        if (p->family() != Family::circular || p->dim() != e1.dim())
            throw EncoderMismatch(
                "hex_cc_projection uses circular encoders sharing n");
    MultiEncoder e;
    e.mode_ = Mode::hex_cc_projection;
    e.parts_.push_back(std::move(e1));
    e.parts_.push_back(std::move(e2));
    e.parts_.push_back(std::move(e3));
    return e;
}

std::size_t MultiEncoder::arity() const {
    return mode_ == Mode::cartesian ? parts_.size() : 2;
}

std::size_t MultiEncoder::dim() const {
    switch (mode_) {
        case Mode::cartesian: return parts_.front().dim();
        case Mode::joint2d: return joint_n_;
        case Mode::hex_concat: return 3 * parts_.front().dim();
        case Mode::hex_cc_projection: return parts_.front().dim();
    }
    return 0;
}

std::string MultiEncoder::mode_name() const {
    switch (mode_) {
        case Mode::cartesian: return "cartesian";
        case Mode::joint2d: return "joint2d";
        case Mode::hex_concat: return "hex_concat";
        case Mode::hex_cc_projection: return "hex_cc_projection";
    }
    return "?";
}

HDVector MultiEncoder::encode(const std::vector<double>& point) const {
    if (point.size() != arity())
        throw ArityMismatch("point dimensionality does not match the encoder");
    switch (mode_) {
        case Mode::cartesian: {
            HDVector acc = parts_.front().encode(point.front());
            for (std::size_t i = 1; i < parts_.size(); ++i)
                acc = bind(acc, parts_[i].encode(point[i]));
            return acc;
        }
        case Mode::joint2d: {
            cvec v(joint_n_);
            for (std::size_t j = 0; j < joint_n_; ++j)
                v[j] = std::polar(1.0, joint_.x[j] * point[0] +
                                           joint_.y[j] * point[1]);
            return HDVector(std::move(v), Family::hadamard);
        }
        case Mode::hex_concat: {
            double p[3];
            for (int i = 0; i < 3; ++i)
                p[i] = dot2(hex_xi[i], point[0], point[1]);
            std::size_t n = parts_.front().dim();
            cvec v(3 * n);
            for (int i = 0; i < 3; ++i) {
                HDVector a = parts_[0].encode(p[(i + 1) % 3]);
                HDVector b = parts_[1].encode(p[(i + 2) % 3]);
                cplx rot = std::polar(1.0, kPi * p[i]);
                for (std::size_t j = 0; j < n; ++j)
                    v[i * n + j] = rot * a[j] * b[j];
            }
            return HDVector(std::move(v), Family::hadamard);
        }
        case Mode::hex_cc_projection: {
            HDVector acc =
                parts_[0].encode(dot2(hex_xi[0], point[0], point[1]));
            for (int i = 1; i < 3; ++i)
                acc = bind(acc, parts_[i].encode(
                                    dot2(hex_xi[i], point[0], point[1])));
            return acc;
        }
    }
    throw std::logic_error("unreachable");
}

MultiEncoder MultiEncoder::resample(std::uint64_t seed) const {
    if (mode_ == Mode::joint2d) return joint2d(joint_n_, sampler_, seed);
    Rng rng(seed);
    MultiEncoder e;
    e.mode_ = mode_;
    for (const auto& p : parts_) e.parts_.push_back(p.resample(rng.next_u64()));
    return e;
}

HDVector encode_multi(const MultiEncoder& enc,
                      const std::vector<double>& point) {
    return enc.encode(point);
}

Eigen::MatrixXcd tensor_encode(const FpeEncoder& encX, const FpeEncoder& encY,
                               double x, double y) {
    if (encX.family() != Family::hadamard ||
        encY.family() != Family::hadamard)
        throw FamilyMismatch("tensor encoding uses hadamard encoders");
    HDVector zx = encX.encode(x);
    HDVector zy = encY.encode(y);
    Eigen::MatrixXcd t(zx.size(), zy.size());
    for (std::size_t i = 0; i < zx.size(); ++i)
        for (std::size_t j = 0; j < zy.size(); ++j)
            t(i, j) = zx[i] * std::conj(zy[j]);
    return t;
}

cplx tensor_inner(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("tensor shapes differ");
    cplx acc = (a.array() * b.array().conjugate()).sum();
    return acc / double(a.rows() * a.cols());
}

Kernel2DEstimate estimate_kernel_2d(const MultiEncoder& proto,
                                    const std::vector<double>& dx,
                                    const std::vector<double>& dy,
                                    std::size_t trials, std::uint64_t base_seed,
                                    bool parallel) {
    const std::size_t gx = dx.size(), gy = dy.size();
    std::vector<std::vector<double>> per_trial(trials,
                                               std::vector<double>(gx * gy));
    run_trials(trials, parallel, [&](std::size_t t) {
        MultiEncoder enc = proto.resample(Rng::trial_seed(base_seed, t));
        HDVector origin = enc.encode({0.0, 0.0});
        for (std::size_t i = 0; i < gx; ++i)
            for (std::size_t j = 0; j < gy; ++j)
                per_trial[t][i * gy + j] =
                    inner(enc.encode({dx[i], dy[j]}), origin).real();
    });

    Kernel2DEstimate est;
    est.dx = dx;
    est.dy = dy;
    est.mean.assign(gx * gy, 0.0);
    est.n = proto.dim();
    est.trials = trials;
    est.mode = proto.mode_name();
    for (std::size_t t = 0; t < trials; ++t)  // fixed order
        for (std::size_t c = 0; c < gx * gy; ++c)
            est.mean[c] += per_trial[t][c];
    for (double& v : est.mean) v /= double(trials);

    // Power spectrum: 2-D DFT of the mean kernel, magnitude squared,
    // normalized to total power 1.
    std::vector<cplx> spec(est.mean.begin(), est.mean.end());
    for (std::size_t i = 0; i < gx; ++i) dft_forward(spec.data() + i * gy, gy);
    cvec col(gx);
    for (std::size_t j = 0; j < gy; ++j) {
        for (std::size_t i = 0; i < gx; ++i) col[i] = spec[i * gy + j];
        dft_forward(col.data(), gx);
        for (std::size_t i = 0; i < gx; ++i) spec[i * gy + j] = col[i];
    }
    est.power.resize(gx * gy);
    double total = 0.0;
    for (std::size_t c = 0; c < gx * gy; ++c)
        total += est.power[c] = std::norm(spec[c]);
    if (total > 0.0)
        for (double& v : est.power) v /= total;
    return est;
}

}  // namespace vfa
