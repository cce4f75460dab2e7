#pragma once

#include "vfa/fpe.hpp"

namespace vfa {

enum class RegressMethod { empirical, tikhonov };

std::string method_name(RegressMethod m);

/// Kernel regression estimate held as a vector y_X; the readout at x is
/// Re(B * inner(y_X, z((c/pi) x))).
struct RegressionEstimator {
    RegressMethod method;
    double c;        // bandwidth
    double lambda;   // ridge parameter (tikhonov only)
    HDVector y_X;
    FpeEncoder enc;
    std::vector<double> X, Y;
    std::vector<double> coeffs;  // solved C (tikhonov) or Y copy (empirical)
};

/// empirical: y_X = (2c/(k B pi)) sum_i Y_i z((c/pi) X_i), X within [-1, 1].
/// tikhonov: kernel ridge regression; solve (G + k lambda I) C = Y with G
/// the encoder Gram matrix, then y_X = (1/B) sum_i C_i z((c/pi) X_i).
RegressionEstimator regress_fit(const std::vector<double>& X,
                                const std::vector<double>& Y,
                                RegressMethod method, double c,
                                const FpeEncoder& enc, double lambda = 0.01);

double regress_eval(const RegressionEstimator& est, double x);

struct RegressSweepRow {
    RegressMethod method;
    std::size_t k;
    std::size_t n;
    double rmse;  // mean over runs, on the test grid
};

/// Fig-11 style sweep: targets f(x) = sinc((20/pi) x) with N(0, 0.01) label
/// noise, X uniform on [-1, 1], test grid [-1, 1] step 0.01.
std::vector<RegressSweepRow> regression_experiment(
    const std::vector<std::size_t>& k_list,
    const std::vector<std::size_t>& n_list, std::size_t runs,
    std::uint64_t seed, double c_empirical = 20.0, double c_tikhonov = 30.0,
    double lambda = 0.01, bool parallel = true);

/// The regression target sin(20 x) / (20 x).
double regression_target(double x);

}  // namespace vfa
