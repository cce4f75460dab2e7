#include "vfa/regression.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "vfa/core.hpp"
#include "vfa/parallel.hpp"

namespace vfa {

namespace {

constexpr double kPi = std::numbers::pi;

HDVector weighted_sum(const std::vector<HDVector>& z,
                      const std::vector<double>& w, double scale) {
    cvec acc(z[0].size(), cplx{0.0, 0.0});
    for (std::size_t j = 0; j < z.size(); ++j)
        for (std::size_t i = 0; i < acc.size(); ++i)
            acc[i] += scale * w[j] * z[j][i];
    return HDVector(std::move(acc), z[0].family(),
                    z[0].family() == Family::block ? z[0].blocks() : 0);
}

}  // namespace

std::string method_name(RegressMethod m) {
    return m == RegressMethod::empirical ? "empirical" : "tikhonov";
}

double regression_target(double x) {
    double u = (20.0 / kPi) * x;
    return u == 0.0 ? 1.0 : std::sin(kPi * u) / (kPi * u);
}

RegressionEstimator regress_fit(const std::vector<double>& X,
                                const std::vector<double>& Y,
                                RegressMethod method, double c,
                                const FpeEncoder& enc, double lambda) {
    if (X.size() != Y.size())
        throw LengthMismatch("X and Y differ in length");
    if (X.empty()) throw EmptyInput("regression needs at least one sample");
    const std::size_t k = X.size();
    if (method == RegressMethod::empirical)
        for (double x : X)
            if (x < -1.0 || x > 1.0)
                throw DomainViolation(
                    "empirical projection expects X within [-1, 1]");
    std::vector<HDVector> z;
    z.reserve(k);
    for (double x : X) z.push_back(enc.encode((c / kPi) * x));
    double B = double(z[0].blocks());

    if (method == RegressMethod::empirical) {
        HDVector y_X = weighted_sum(z, Y, 2.0 * c / (double(k) * B * kPi));
        return {method, c, 0.0, std::move(y_X), enc, X, Y, Y};
    }

    Eigen::MatrixXd G(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            G(i, j) = G(j, i) = inner(z[i], z[j]).real();
    Eigen::MatrixXd A = G;
    A.diagonal().array() += double(k) * lambda;
    Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(Y.data(), k);
    Eigen::VectorXd C = A.ldlt().solve(y);
    double residual = (A * C - y).norm();
    if (!C.allFinite() || residual > 1e-8 * std::max(1.0, y.norm()))
        throw SingularSystem("regularized Gram system is ill-conditioned");
    std::vector<double> coeffs(C.data(), C.data() + k);
    HDVector y_X = weighted_sum(z, coeffs, 1.0 / B);
    return {method, c, lambda, std::move(y_X), enc, X, Y, std::move(coeffs)};
}

double regress_eval(const RegressionEstimator& est, double x) {
    double B = double(est.y_X.blocks());
    return (B * inner(est.y_X, est.enc.encode((est.c / kPi) * x))).real();
}

std::vector<RegressSweepRow> regression_experiment(
    const std::vector<std::size_t>& k_list,
    const std::vector<std::size_t>& n_list, std::size_t runs,
    std::uint64_t seed, double c_empirical, double c_tikhonov, double lambda,
    bool parallel) {
    auto grid = linspace(-1.0, 1.0, 0.01);
    const std::size_t nk = k_list.size(), nn = n_list.size();
    // Slot layout: [method][k][n][run].
    std::vector<std::vector<double>> sq(2 * nk * nn,
                                        std::vector<double>(runs));
    run_trials(runs, parallel, [&](std::size_t run) {
        Rng rng(Rng::trial_seed(seed, run));
        for (std::size_t ki = 0; ki < nk; ++ki) {
            const std::size_t k = k_list[ki];
            std::vector<double> X(k), Y(k);
            for (std::size_t i = 0; i < k; ++i) {
                X[i] = rng.uniform(-1.0, 1.0);
                Y[i] = regression_target(X[i]) + 0.1 * rng.gaussian();
            }
            for (std::size_t ni = 0; ni < nn; ++ni) {
                std::uint64_t enc_seed = rng.next_u64();
                for (int m = 0; m < 2; ++m) {
                    RegressMethod method = m == 0 ? RegressMethod::empirical
                                                  : RegressMethod::tikhonov;
                    FpeEncoder enc = FpeEncoder::sample_base(
                        PhaseDistribution::uniform(), Family::hadamard,
                        n_list[ni], enc_seed);
                    double mse = std::nan("");
                    try {
                        RegressionEstimator est = regress_fit(
                            X, Y, method,
                            method == RegressMethod::empirical ? c_empirical
                                                               : c_tikhonov,
                            enc, lambda);
                        double acc = 0.0;
                        for (double x : grid) {
                            double e =
                                regress_eval(est, x) - regression_target(x);
                            acc += e * e;
                        }
                        mse = acc / double(grid.size());
                    } catch (const std::runtime_error&) {
                    }
                    sq[(std::size_t(m) * nk + ki) * nn + ni][run] = mse;
                }
            }
        }
    });
    std::vector<RegressSweepRow> rows;
    for (int m = 0; m < 2; ++m)
        for (std::size_t ki = 0; ki < nk; ++ki)
            for (std::size_t ni = 0; ni < nn; ++ni) {
                const auto& v = sq[(std::size_t(m) * nk + ki) * nn + ni];
                double acc = 0.0;
                std::size_t used = 0;
                for (double x : v)
                    if (std::isfinite(x)) {
                        acc += x;
                        ++used;
                    }
                rows.push_back({m == 0 ? RegressMethod::empirical
                                       : RegressMethod::tikhonov,
                                k_list[ki], n_list[ni],
                                used ? std::sqrt(acc / double(used))
                                     : std::nan("")});
            }
    return rows;
}

}  // namespace vfa
