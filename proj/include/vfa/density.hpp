#pragma once

#include "vfa/fpe.hpp"

namespace vfa {

/// Band-limited maximum-likelihood density estimate held as a vector:
/// y_p = (sqrt(f_c)/(k B)) sum_j c_hat_j z(f_c r_j), so the squared readout
/// integrates to ~1.
struct DensityEstimator {
    HDVector y_p;
    FpeEncoder enc;
    double f_c;
    std::vector<double> c_hat;
    std::vector<double> samples;
};

/// Same estimator with the Gram matrix computed from the analytic sinc
/// kernel instead of vector inner products.
struct NumericDensity {
    double f_c;
    std::vector<double> c_hat;
    std::vector<double> samples;
};

/// Single-orthant (all-positive) solve of rho(c)_i =
/// (1/k) sum_j c_j K(f_c(r_i - r_j)) - 1/c_i = 0 by damped fixed point
/// (eta = 0.5, init 1, tol 1e-8, <= 1e4 iterations) with a Newton fallback
/// on stall. K entries come from encoder inner products.
DensityEstimator blml_fit(const std::vector<double>& samples, double f_c,
                          const FpeEncoder& enc);

NumericDensity blml_fit_numeric(const std::vector<double>& samples,
                                double f_c);

/// Squared real readout; nonnegative by construction.
double blml_eval(const DensityEstimator& est, double r);
double blml_eval(const NumericDensity& est, double r);

/// Residual of the fitted coefficients (for convergence checks).
double blml_residual(const DensityEstimator& est);

/// Mean over curves of the trapezoid integrated squared error vs truth.
double mise(const std::vector<std::vector<double>>& curves,
            const std::function<double(double)>& truth,
            const std::vector<double>& grid);

/// The band-limited surrogate pdf
/// f(x) = 0.078 (sinc^2(0.2 x) + sinc^2(0.2 x + 0.2))^2, cutoff 0.4 Hz.
double surrogate_pdf(double x);

/// Inverse-CDF draws from surrogate_pdf.
std::vector<double> sample_surrogate(std::size_t k, Rng& rng);

struct DensitySweepResult {
    std::vector<std::size_t> k_list;
    std::vector<std::size_t> n_list;
    std::vector<double> mise_numeric;            // per k
    std::vector<std::vector<double>> mise_vfa;   // [k index][n index]
};

/// Monte-Carlo MISE sweep against the surrogate pdf; runs parallelize with
/// per-run seeds, reduction in run order.
DensitySweepResult density_experiment(const std::vector<std::size_t>& k_list,
                                      const std::vector<std::size_t>& n_list,
                                      std::size_t runs, std::uint64_t seed,
                                      double f_c = 0.4, bool parallel = true);

}  // namespace vfa
