#include "vfa/density.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "vfa/core.hpp"
#include "vfa/parallel.hpp"

namespace vfa {

namespace {

constexpr double kPi = std::numbers::pi;

double sinc_n(double u) {
    return u == 0.0 ? 1.0 : std::sin(kPi * u) / (kPi * u);
}

// Damped fixed-point solve of (1/k) K c = 1/c in the all-positive orthant,
// with a Newton fallback when the residual stalls.
Eigen::VectorXd solve_orthant(const Eigen::MatrixXd& K) {
    const auto k = K.rows();
    Eigen::VectorXd c = Eigen::VectorXd::Ones(k);
    const double eta = 0.5;
    const double tol = 1e-8;
    const int max_iter = 10000;
    double best = 1e300;
    int stall = 0;
    for (int it = 0; it < max_iter; ++it) {
        Eigen::VectorXd q = (K * c) / double(k);
        Eigen::VectorXd rho = q - c.cwiseInverse();
        double res = rho.cwiseAbs().maxCoeff();
        if (res < tol) return c;
        if (res < best - 1e-12) {
            best = res;
            stall = 0;
        } else {
            ++stall;
        }
        // The plain update divides by q, so it needs q > 0; fall back to a
        // Newton step on rho(c) = (1/k) K c - 1/c when q dips out of the
        // orthant or the residual stalls.
        if (stall > 200 || (q.array() <= 0.0).any()) {
            Eigen::MatrixXd J = K / double(k);
            J.diagonal() += c.cwiseAbs2().cwiseInverse();
            Eigen::VectorXd step = J.ldlt().solve(-rho);
            double scale = 1.0;
            while (scale > 1e-6 &&
                   ((c + scale * step).array() <= 0.0).any())
                scale *= 0.5;
            if (scale <= 1e-6)
                throw NonPositiveGram(
                    "cannot stay in the positive orthant; orthant choice "
                    "failed");
            c += scale * step;
            stall = 0;
        } else {
            c = (1.0 - eta) * c + eta * q.cwiseInverse();
        }
    }
    throw NoConvergence("density fixed point did not converge");
}

std::vector<double> to_std(const Eigen::VectorXd& v) {
    return {v.data(), v.data() + v.size()};
}

}  // namespace

DensityEstimator blml_fit(const std::vector<double>& samples, double f_c,
                          const FpeEncoder& enc) {
    if (samples.empty()) throw EmptyInput("density needs at least one sample");
    if (f_c <= 0.0) throw InvalidDensity("cutoff frequency must be positive");
    const std::size_t k = samples.size();
    std::vector<HDVector> z;
    z.reserve(k);
    for (double r : samples) z.push_back(enc.encode(f_c * r));
    Eigen::MatrixXd K(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            K(i, j) = K(j, i) = inner(z[i], z[j]).real();
    Eigen::VectorXd c = solve_orthant(K);
    double B = double(z[0].blocks());
    double scale = std::sqrt(f_c) / (double(k) * B);
    cvec acc(z[0].size(), cplx{0.0, 0.0});
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < acc.size(); ++i)
            acc[i] += scale * c[j] * z[j][i];
    HDVector y_p(std::move(acc), z[0].family(),
                 z[0].family() == Family::block ? z[0].blocks() : 0);
    return {std::move(y_p), enc, f_c, to_std(c), samples};
}

NumericDensity blml_fit_numeric(const std::vector<double>& samples,
                                double f_c) {
    if (samples.empty()) throw EmptyInput("density needs at least one sample");
    const std::size_t k = samples.size();
    Eigen::MatrixXd K(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            K(i, j) = K(j, i) = sinc_n(f_c * (samples[i] - samples[j]));
    Eigen::VectorXd c = solve_orthant(K);
    return {f_c, to_std(c), samples};
}

double blml_eval(const DensityEstimator& est, double r) {
    double B = double(est.y_p.blocks());
    double g = (B * inner(est.y_p, est.enc.encode(est.f_c * r))).real();
    return g * g;
}

double blml_eval(const NumericDensity& est, double r) {
    double g = 0.0;
    for (std::size_t j = 0; j < est.samples.size(); ++j)
        g += est.c_hat[j] * sinc_n(est.f_c * (r - est.samples[j]));
    g *= std::sqrt(est.f_c) / double(est.samples.size());
    return g * g;
}

double blml_residual(const DensityEstimator& est) {
    const std::size_t k = est.samples.size();
    std::vector<HDVector> z;
    z.reserve(k);
    for (double r : est.samples) z.push_back(est.enc.encode(est.f_c * r));
    double worst = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        double q = 0.0;
        for (std::size_t j = 0; j < k; ++j)
            q += est.c_hat[j] * inner(z[i], z[j]).real();
        worst = std::max(worst,
                         std::abs(q / double(k) - 1.0 / est.c_hat[i]));
    }
    return worst;
}

double mise(const std::vector<std::vector<double>>& curves,
            const std::function<double(double)>& truth,
            const std::vector<double>& grid) {
    if (curves.empty()) throw EmptyInput("no curves given");
    double acc = 0.0;
    std::size_t used = 0;
    for (const auto& curve : curves) {
        if (curve.size() != grid.size())
            throw GridMismatch("curve length does not match the grid");
        bool bad = false;
        double ise = 0.0;
        for (std::size_t i = 1; i < grid.size(); ++i) {
            double e0 = curve[i - 1] - truth(grid[i - 1]);
            double e1 = curve[i] - truth(grid[i]);
            if (!std::isfinite(e0) || !std::isfinite(e1)) bad = true;
            ise += 0.5 * (e0 * e0 + e1 * e1) * (grid[i] - grid[i - 1]);
        }
        if (!bad) {
            acc += ise;
            ++used;
        }
    }
    if (used == 0) throw NoConvergence("all density runs failed");
    return acc / double(used);
}

double surrogate_pdf(double x) {
    double a = sinc_n(0.2 * x);
    double b = sinc_n(0.2 * x + 0.2);
    double s = a * a + b * b;
    return 0.078 * s * s;
}

std::vector<double> sample_surrogate(std::size_t k, Rng& rng) {
    // Inverse-CDF table over a wide truncation of the pdf, built once.
    static const auto table = [] {
        std::vector<double> xs, cdf;
        const double lo = -80.0, hi = 80.0, step = 0.005;
        std::size_t count = std::size_t((hi - lo) / step) + 1;
        xs.resize(count);
        cdf.resize(count);
        double acc = 0.0, prev = surrogate_pdf(lo);
        xs[0] = lo;
        cdf[0] = 0.0;
        for (std::size_t i = 1; i < count; ++i) {
            xs[i] = lo + double(i) * step;
            double cur = surrogate_pdf(xs[i]);
            acc += 0.5 * (prev + cur) * step;
            cdf[i] = acc;
            prev = cur;
        }
        for (auto& v : cdf) v /= acc;
        return std::pair{xs, cdf};
    }();
    const auto& [xs, cdf] = table;
    std::vector<double> out(k);
    for (auto& v : out) {
        double u = rng.next_double();
        auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
        std::size_t hi_i = std::min<std::size_t>(
            std::max<std::ptrdiff_t>(1, it - cdf.begin()), cdf.size() - 1);
        double c0 = cdf[hi_i - 1], c1 = cdf[hi_i];
        double t = c1 > c0 ? (u - c0) / (c1 - c0) : 0.0;
        v = xs[hi_i - 1] + t * (xs[hi_i] - xs[hi_i - 1]);
    }
    return out;
}

DensitySweepResult density_experiment(const std::vector<std::size_t>& k_list,
                                      const std::vector<std::size_t>& n_list,
                                      std::size_t runs, std::uint64_t seed,
                                      double f_c, bool parallel) {
    auto grid = linspace(-5.0, 5.0, 0.001);
    const std::size_t nk = k_list.size(), nn = n_list.size();
    auto ise_of = [&](const std::function<double(double)>& est) {
        double acc = 0.0;
        double prev = est(grid[0]) - surrogate_pdf(grid[0]);
        for (std::size_t i = 1; i < grid.size(); ++i) {
            double cur = est(grid[i]) - surrogate_pdf(grid[i]);
            acc += 0.5 * (prev * prev + cur * cur) * (grid[i] - grid[i - 1]);
            prev = cur;
        }
        return acc;
    };
    // Per-run ISE slots; MISE reduction happens in run order afterwards.
    std::vector<std::vector<double>> num_ise(nk,
                                             std::vector<double>(runs));
    std::vector<std::vector<std::vector<double>>> vfa_ise(
        nk, std::vector<std::vector<double>>(nn, std::vector<double>(runs)));
    run_trials(runs, parallel, [&](std::size_t run) {
        Rng rng(Rng::trial_seed(seed, run));
        for (std::size_t ki = 0; ki < nk; ++ki) {
            std::vector<double> samples = sample_surrogate(k_list[ki], rng);
            std::vector<std::uint64_t> enc_seeds(nn);
            for (auto& s : enc_seeds) s = rng.next_u64();
            try {
                NumericDensity nd = blml_fit_numeric(samples, f_c);
                num_ise[ki][run] =
                    ise_of([&](double r) { return blml_eval(nd, r); });
            } catch (const std::runtime_error&) {
                num_ise[ki][run] = std::nan("");
            }
            for (std::size_t ni = 0; ni < nn; ++ni) {
                try {
                    FpeEncoder enc = FpeEncoder::sample_base(
                        PhaseDistribution::uniform(), Family::hadamard,
                        n_list[ni], enc_seeds[ni]);
                    DensityEstimator de = blml_fit(samples, f_c, enc);
                    vfa_ise[ki][ni][run] =
                        ise_of([&](double r) { return blml_eval(de, r); });
                } catch (const std::runtime_error&) {
                    vfa_ise[ki][ni][run] = std::nan("");
                }
            }
        }
    });
    auto mean_skip_nan = [](const std::vector<double>& v) {
        double acc = 0.0;
        std::size_t used = 0;
        for (double x : v)
            if (std::isfinite(x)) {
                acc += x;
                ++used;
            }
        if (used == 0) throw NoConvergence("all density runs failed");
        return acc / double(used);
    };
    DensitySweepResult out;
    out.k_list = k_list;
    out.n_list = n_list;
    out.mise_numeric.resize(nk);
    out.mise_vfa.assign(nk, std::vector<double>(nn));
    for (std::size_t ki = 0; ki < nk; ++ki) {
        out.mise_numeric[ki] = mean_skip_nan(num_ise[ki]);
        for (std::size_t ni = 0; ni < nn; ++ni)
            out.mise_vfa[ki][ni] = mean_skip_nan(vfa_ise[ki][ni]);
    }
    return out;
}

}  // namespace vfa
