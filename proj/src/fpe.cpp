#include "vfa/fpe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "vfa/dft.hpp"
#include "vfa/parallel.hpp"

namespace vfa {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kTableSize = 4096;

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

}  // namespace

PhaseDistribution PhaseDistribution::uniform() {
    PhaseDistribution d;
    d.kind_ = Kind::uniform;
    d.name_ = "uniform";
    return d;
}

PhaseDistribution PhaseDistribution::gaussian(double sigma) {
    if (sigma <= 0.0) throw InvalidDensity("gaussian sigma must be positive");
    PhaseDistribution d;
    d.kind_ = Kind::gaussian;
    d.param_ = sigma;
    d.name_ = "gaussian:" + std::to_string(sigma);
    d.phi_.resize(kTableSize + 1);
    d.density_.resize(kTableSize + 1);
    for (std::size_t i = 0; i <= kTableSize; ++i) {
        double phi = -kPi + 2.0 * kPi * double(i) / double(kTableSize);
        d.phi_[i] = phi;
        d.density_[i] = std::exp(-0.5 * phi * phi / (sigma * sigma));
    }
    d.build_cdf_table();
    return d;
}

PhaseDistribution PhaseDistribution::laplace(double b) {
    if (b <= 0.0) throw InvalidDensity("laplace scale must be positive");
    PhaseDistribution d;
    d.kind_ = Kind::laplace;
    d.param_ = b;
    d.name_ = "laplace:" + std::to_string(b);
    d.phi_.resize(kTableSize + 1);
    d.density_.resize(kTableSize + 1);
    for (std::size_t i = 0; i <= kTableSize; ++i) {
        double phi = -kPi + 2.0 * kPi * double(i) / double(kTableSize);
        d.phi_[i] = phi;
        d.density_[i] = std::exp(-std::abs(phi) / b);
    }
    d.build_cdf_table();
    return d;
}

PhaseDistribution PhaseDistribution::triangular(double half_width) {
    if (half_width <= 0.0 || half_width > kPi)
        throw InvalidDensity("triangular half-width must be in (0, pi]");
    PhaseDistribution d;
    d.kind_ = Kind::triangular;
    d.param_ = half_width;
    d.name_ = "triangular:" + std::to_string(half_width);
    d.phi_.resize(kTableSize + 1);
    d.density_.resize(kTableSize + 1);
    for (std::size_t i = 0; i <= kTableSize; ++i) {
        double phi = -kPi + 2.0 * kPi * double(i) / double(kTableSize);
        d.phi_[i] = phi;
        d.density_[i] = std::max(0.0, 1.0 - std::abs(phi) / half_width);
    }
    d.build_cdf_table();
    return d;
}

PhaseDistribution PhaseDistribution::custom(std::vector<double> phi,
                                            std::vector<double> density) {
    if (phi.size() != density.size() || phi.size() < 2)
        throw InvalidDensity("custom table needs matching phi/density arrays");
    for (std::size_t i = 0; i < phi.size(); ++i) {
        if (density[i] < 0.0)
            throw InvalidDensity("custom density has negative entries");
        if (phi[i] < -kPi - 1e-12 || phi[i] > kPi + 1e-12)
            throw InvalidDensity("custom density support exceeds [-pi, pi]");
        if (i > 0 && phi[i] <= phi[i - 1])
            throw InvalidDensity("custom phi grid must be increasing");
    }
    double integral = 0.0;
    for (std::size_t i = 1; i < phi.size(); ++i)
        integral +=
            0.5 * (density[i] + density[i - 1]) * (phi[i] - phi[i - 1]);
    if (std::abs(integral - 1.0) > 1e-6)
        throw InvalidDensity("custom density does not integrate to 1");
    PhaseDistribution d;
    d.kind_ = Kind::custom;
    d.name_ = "custom";
    d.phi_ = std::move(phi);
    d.density_ = std::move(density);
    d.build_cdf_table();
    return d;
}

PhaseDistribution PhaseDistribution::discrete_roots(int l) {
    if (l < 2) throw InvalidDensity("discrete_roots order must be >= 2");
    PhaseDistribution d;
    d.kind_ = Kind::discrete_roots;
    d.roots_ = l;
    d.name_ = "discrete_roots:" + std::to_string(l);
    d.atoms_.resize(l);
    d.weights_.resize(l);
    for (int j = 0; j < l; ++j) {
        d.atoms_[j] = PhaseVector::wrap(2.0 * kPi * double(j) / double(l));
        d.weights_[j] = double(j + 1) / double(l);  // cumulative
    }
    return d;
}

PhaseDistribution PhaseDistribution::discrete_set(std::vector<double> phases,
                                                  std::vector<double> weights) {
    if (phases.empty() || phases.size() != weights.size())
        throw InvalidDensity("discrete_set needs matching phases/weights");
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw InvalidDensity("discrete_set weights must be >= 0");
        total += w;
    }
    if (total <= 0.0) throw InvalidDensity("discrete_set weights sum to 0");
    PhaseDistribution d;
    d.kind_ = Kind::discrete_set;
    d.name_ = "discrete_set";
    d.atoms_.resize(phases.size());
    d.weights_.resize(phases.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < phases.size(); ++i) {
        d.atoms_[i] = PhaseVector::wrap(phases[i]);
        acc += weights[i] / total;
        d.weights_[i] = acc;
    }
    return d;
}

PhaseDistribution PhaseDistribution::parse(const std::string& spec) {
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    double arg = 1.0;
    if (colon != std::string::npos) arg = std::stod(spec.substr(colon + 1));
    if (head == "uniform") return uniform();
    if (head == "gaussian") return gaussian(arg);
    if (head == "laplace") return laplace(arg);
    if (head == "triangular")
        return triangular(colon == std::string::npos ? kPi : arg);
    if (head == "discrete_roots" || head == "roots")
        return discrete_roots(static_cast<int>(arg));
    if (head == "truncsinc")
        return truncated_abs_sinc_distribution(colon == std::string::npos ? 2.0
                                                                          : arg);
    throw InvalidDensity("unknown phase distribution: " + spec);
}

void PhaseDistribution::build_cdf_table() {
    // Normalize the density table, then tabulate the CDF for inverse-CDF
    // sampling with linear interpolation between nodes.
    double integral = 0.0;
    for (std::size_t i = 1; i < phi_.size(); ++i)
        integral +=
            0.5 * (density_[i] + density_[i - 1]) * (phi_[i] - phi_[i - 1]);
    if (integral <= 0.0) throw InvalidDensity("density integrates to 0");
    for (double& v : density_) v /= integral;
    cdf_.assign(phi_.size(), 0.0);
    for (std::size_t i = 1; i < phi_.size(); ++i)
        cdf_[i] = cdf_[i - 1] + 0.5 * (density_[i] + density_[i - 1]) *
                                    (phi_[i] - phi_[i - 1]);
    cdf_.back() = 1.0;
}

std::string PhaseDistribution::name() const { return name_; }

std::optional<double> PhaseDistribution::period() const {
    if (kind_ == Kind::discrete_roots) return double(roots_);
    return std::nullopt;
}

double PhaseDistribution::sample(Rng& rng) const {
    switch (kind_) {
        case Kind::uniform:
            return rng.uniform_phase();
        case Kind::gaussian: {
            // Rejection onto [-pi, pi); negligible loss for sigma ~ 1.
            for (;;) {
                double phi = param_ * rng.gaussian();
                if (phi >= -kPi && phi < kPi) return phi;
            }
        }
        case Kind::laplace: {
            for (;;) {
                double u = rng.next_double() - 0.5;
                double phi = (u < 0.0 ? 1.0 : -1.0) * param_ *
                             std::log(1.0 - 2.0 * std::abs(u));
                if (phi >= -kPi && phi < kPi) return phi;
            }
        }
        case Kind::triangular:
            return param_ * (rng.next_double() + rng.next_double() - 1.0);
        case Kind::custom: {
            double u = rng.next_double();
            auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
            std::size_t hi = std::min<std::size_t>(
                std::max<std::size_t>(1, it - cdf_.begin()), cdf_.size() - 1);
            double c0 = cdf_[hi - 1], c1 = cdf_[hi];
            double t = c1 > c0 ? (u - c0) / (c1 - c0) : 0.0;
            return phi_[hi - 1] + t * (phi_[hi] - phi_[hi - 1]);
        }
        case Kind::discrete_roots:
        case Kind::discrete_set: {
            double u = rng.next_double();
            auto it = std::lower_bound(weights_.begin(), weights_.end(), u);
            std::size_t idx =
                std::min<std::size_t>(it - weights_.begin(), atoms_.size() - 1);
            return atoms_[idx];
        }
    }
    return 0.0;
}

double PhaseDistribution::kernel_target(double d) const {
    switch (kind_) {
        case Kind::uniform:
            return sinc(kPi * d);
        case Kind::discrete_roots:
        case Kind::discrete_set: {
            double acc = 0.0, prev = 0.0;
            for (std::size_t i = 0; i < atoms_.size(); ++i) {
                acc += (weights_[i] - prev) * std::cos(atoms_[i] * d);
                prev = weights_[i];
            }
            return acc;
        }
        default: {
            // Trapezoid characteristic function of the tabulated density.
            double acc = 0.0;
            for (std::size_t i = 1; i < phi_.size(); ++i) {
                double f0 = density_[i - 1] * std::cos(phi_[i - 1] * d);
                double f1 = density_[i] * std::cos(phi_[i] * d);
                acc += 0.5 * (f0 + f1) * (phi_[i] - phi_[i - 1]);
            }
            return acc;
        }
    }
}

PhaseDistribution truncated_abs_sinc_distribution(double a) {
    std::vector<double> phi(kTableSize + 1), dens(kTableSize + 1);
    double integral = 0.0;
    for (std::size_t i = 0; i <= kTableSize; ++i) {
        phi[i] = -kPi + 2.0 * kPi * double(i) / double(kTableSize);
        dens[i] = std::abs(sinc(a * phi[i]));
    }
    for (std::size_t i = 1; i <= kTableSize; ++i)
        integral += 0.5 * (dens[i] + dens[i - 1]) * (phi[i] - phi[i - 1]);
    for (double& v : dens) v /= integral;
    return PhaseDistribution::custom(std::move(phi), std::move(dens));
}

FpeEncoder FpeEncoder::sample_base(const PhaseDistribution& dist, Family family,
                                   std::size_t n, std::uint64_t seed,
                                   std::size_t block_count, bool real_valued) {
    if (n < 1) throw DimensionMismatch("encoder dimension must be >= 1");
    if (real_valued && family != Family::circular)
        throw FamilyMismatch(
            "Hermitian symmetry applies to the circular family only");
    std::size_t blocks = family == Family::hadamard ? n
                         : family == Family::circular
                             ? 1
                             : [&] {
                                   if (block_count == 0 || n % block_count != 0)
                                       throw DimensionMismatch(
                                           "block count must divide n");
                                   return block_count;
                               }();
    Rng rng(seed);
    std::vector<double> phases(n);
    if (family == Family::block &&
        dist.kind() == PhaseDistribution::Kind::uniform) {
        // Exactly k-sparse base: one hot phasor per block. The per-block
        // Fourier phases are psi - 2*pi*h*m/bs wrapped into [-pi, pi), which
        // keeps integer powers one-hot while the wrapped phases behave as
        // uniform samples.
        std::size_t bs = n / blocks;
        for (std::size_t b = 0; b < blocks; ++b) {
            std::size_t hot = rng.uniform_index(bs);
            double psi = rng.uniform_phase();
            for (std::size_t m = 0; m < bs; ++m)
                phases[b * bs + m] = PhaseVector::wrap(
                    psi - 2.0 * kPi * double(hot) * double(m) / double(bs));
        }
    } else if (family == Family::circular && real_valued) {
        for (double& p : phases) p = 0.0;
        for (std::size_t k = 1; k < (n + 1) / 2; ++k) {
            phases[k] = dist.sample(rng);
            phases[n - k] = -phases[k];
        }
        // phases[0] (and phases[n/2] for even n) stay 0 to keep the
        // signal real.
    } else {
        for (double& p : phases) p = dist.sample(rng);
    }
    return FpeEncoder(family, n, blocks, PhaseVector(std::move(phases)), dist,
                      dist.period(), seed, real_valued);
}

HDVector FpeEncoder::encode(double r) const {
    if (!std::isfinite(r))
        throw std::invalid_argument("encoded value must be finite");
    // Exact kernel periodicity: reduce to the canonical representative in
    // [0, period) first, so r and r + period encode bit-identically.
    if (period_) {
        r = std::fmod(r, *period_);
        if (r < 0.0) r += *period_;
    }
    cvec v(n_);
    for (std::size_t i = 0; i < n_; ++i)
        v[i] = std::polar(1.0, phases_[i] * r);
    if (family_ == Family::hadamard)
        return HDVector(std::move(v), family_);
    std::size_t bs = n_ / blocks_;
    for (std::size_t b = 0; b < blocks_; ++b)
        dft_inverse(v.data() + b * bs, bs);
    return HDVector(std::move(v), family_,
                    family_ == Family::block ? blocks_ : 0);
}

FpeEncoder FpeEncoder::resample(std::uint64_t seed) const {
    return sample_base(dist_, family_, n_, seed,
                       family_ == Family::block ? blocks_ : 0, real_valued_);
}

bool FpeEncoder::same_config(const FpeEncoder& other) const {
    return family_ == other.family_ && n_ == other.n_ &&
           blocks_ == other.blocks_;
}

KernelEstimate estimate_kernel(const FpeEncoder& proto,
                               const std::vector<double>& d_grid,
                               std::size_t trials, std::uint64_t base_seed,
                               bool parallel) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    const std::size_t g = d_grid.size();
    std::vector<cvec> per_trial(trials, cvec(g));
    run_trials(trials, parallel, [&](std::size_t t) {
        FpeEncoder enc = proto.resample(Rng::trial_seed(base_seed, t));
        HDVector origin = enc.encode(0.0);
        for (std::size_t i = 0; i < g; ++i)
            per_trial[t][i] = inner(enc.encode(d_grid[i]), origin);
    });

    KernelEstimate est;
    est.d = d_grid;
    est.mean.assign(g, 0.0);
    est.stddev.assign(g, 0.0);
    est.imag_mean.assign(g, 0.0);
    est.n = proto.dim();
    est.trials = trials;
    est.family = family_name(proto.family());
    est.dist = proto.distribution().name();
    for (std::size_t t = 0; t < trials; ++t)  // fixed order
        for (std::size_t i = 0; i < g; ++i) {
            est.mean[i] += per_trial[t][i].real();
            est.imag_mean[i] += per_trial[t][i].imag();
        }
    for (std::size_t i = 0; i < g; ++i) {
        est.mean[i] /= double(trials);
        est.imag_mean[i] /= double(trials);
    }
    if (trials > 1) {
        for (std::size_t t = 0; t < trials; ++t)
            for (std::size_t i = 0; i < g; ++i) {
                double dev = per_trial[t][i].real() - est.mean[i];
                est.stddev[i] += dev * dev;
            }
        for (std::size_t i = 0; i < g; ++i)
            est.stddev[i] = std::sqrt(est.stddev[i] / double(trials - 1));
    }
    return est;
}

double kernel_rmse(const KernelEstimate& est,
                   const std::function<double(double)>& target) {
    if (est.d.empty()) throw GridMismatch("empty kernel estimate");
    double acc = 0.0;
    for (std::size_t i = 0; i < est.d.size(); ++i) {
        double e = est.mean[i] - target(est.d[i]);
        acc += e * e;
    }
    return std::sqrt(acc / double(est.d.size()));
}

double kernel_rmse(const KernelEstimate& a, const KernelEstimate& b) {
    if (a.d.size() != b.d.size())
        throw GridMismatch("kernel estimates use different grids");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.d.size(); ++i) {
        if (std::abs(a.d[i] - b.d[i]) > 1e-12)
            throw GridMismatch("kernel estimates use different grids");
        double e = a.mean[i] - b.mean[i];
        acc += e * e;
    }
    return std::sqrt(acc / double(a.d.size()));
}

std::vector<double> linspace(double lo, double hi, double step) {
    std::vector<double> g;
    auto count = static_cast<std::size_t>(std::llround((hi - lo) / step)) + 1;
    g.reserve(count);
    for (std::size_t i = 0; i < count; ++i) g.push_back(lo + double(i) * step);
    return g;
}

}  // namespace vfa
