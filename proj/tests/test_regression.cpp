#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "vfa/regression.hpp"

using namespace vfa;

namespace {

constexpr double pi = std::numbers::pi;

FpeEncoder had(std::size_t n, std::uint64_t seed) {
    return FpeEncoder::sample_base(PhaseDistribution::uniform(),
                                   Family::hadamard, n, seed);
}

double grid_rmse(const RegressionEstimator& est,
                 const std::function<double(double)>& truth) {
    double acc = 0.0;
    std::size_t count = 0;
    for (double x = -1.0; x <= 1.0 + 1e-12; x += 0.01) {
        double e = regress_eval(est, x) - truth(x);
        acc += e * e;
        ++count;
    }
    return std::sqrt(acc / double(count));
}

}  // namespace

TEST_CASE("target function") {
    CHECK(regression_target(0.0) == doctest::Approx(1.0));
    CHECK(regression_target(pi / 20.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(regression_target(0.1) ==
          doctest::Approx(std::sin(2.0) / 2.0));
}

TEST_CASE("input validation") {
    FpeEncoder enc = had(64, 1);
    CHECK_THROWS_AS(
        regress_fit({0.1, 0.2}, {1.0}, RegressMethod::empirical, 20.0, enc),
        LengthMismatch);
    CHECK_THROWS_AS(regress_fit({}, {}, RegressMethod::empirical, 20.0, enc),
                    EmptyInput);
    CHECK_THROWS_AS(
        regress_fit({1.5}, {1.0}, RegressMethod::empirical, 20.0, enc),
        DomainViolation);
    // The ridge route has no domain restriction.
    CHECK_NOTHROW(
        regress_fit({1.5}, {1.0}, RegressMethod::tikhonov, 30.0, enc));
}

TEST_CASE("empirical projection tracks a noiseless target") {
    Rng rng(3);
    std::size_t k = 600;
    std::vector<double> X(k), Y(k);
    for (std::size_t i = 0; i < k; ++i) {
        X[i] = rng.uniform(-1.0, 1.0);
        Y[i] = regression_target(X[i]);
    }
    RegressionEstimator est =
        regress_fit(X, Y, RegressMethod::empirical, 20.0, had(2048, 5));
    CHECK(grid_rmse(est, regression_target) < 0.15);
    CHECK(est.method == RegressMethod::empirical);
    CHECK(est.coeffs.size() == k);
}

TEST_CASE("tikhonov fit beats empirical on the reference setup") {
    Rng rng(4);
    std::size_t k = 150;
    std::vector<double> X(k), Y(k);
    for (std::size_t i = 0; i < k; ++i) {
        X[i] = rng.uniform(-1.0, 1.0);
        Y[i] = regression_target(X[i]) + 0.1 * rng.gaussian();
    }
    FpeEncoder enc = had(1024, 6);
    RegressionEstimator emp =
        regress_fit(X, Y, RegressMethod::empirical, 20.0, enc);
    RegressionEstimator tik =
        regress_fit(X, Y, RegressMethod::tikhonov, 30.0, enc, 0.01);
    double e = grid_rmse(emp, regression_target);
    double t = grid_rmse(tik, regression_target);
    CHECK(t < 0.15);
    CHECK(t < e);
}

TEST_CASE("tikhonov solves the regularized Gram system") {
    Rng rng(5);
    std::size_t k = 40;
    std::vector<double> X(k), Y(k);
    for (std::size_t i = 0; i < k; ++i) {
        X[i] = rng.uniform(-1.0, 1.0);
        Y[i] = regression_target(X[i]);
    }
    FpeEncoder enc = had(2048, 7);
    RegressionEstimator est =
        regress_fit(X, Y, RegressMethod::tikhonov, 30.0, enc, 0.01);
    // Residual of (G + k lambda I) C = Y, recomputed independently.
    std::vector<HDVector> z;
    for (double x : X) z.push_back(enc.encode((30.0 / pi) * x));
    double worst = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        double lhs = double(k) * 0.01 * est.coeffs[i];
        for (std::size_t j = 0; j < k; ++j)
            lhs += inner(z[i], z[j]).real() * est.coeffs[j];
        worst = std::max(worst, std::abs(lhs - Y[i]));
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("huge ridge flattens the estimate") {
    Rng rng(6);
    std::vector<double> X, Y;
    for (int i = 0; i < 30; ++i) {
        X.push_back(rng.uniform(-1.0, 1.0));
        Y.push_back(regression_target(X.back()));
    }
    RegressionEstimator est =
        regress_fit(X, Y, RegressMethod::tikhonov, 30.0, had(512, 8), 1e6);
    for (double x : {-0.8, -0.2, 0.0, 0.5})
        CHECK(std::abs(regress_eval(est, x)) < 1e-3);
    for (std::size_t i = 0; i < X.size(); ++i)
        CHECK(est.coeffs[i] ==
              doctest::Approx(Y[i] / (30.0 * 1e6)).epsilon(1e-4));
}

TEST_CASE("duplicated samples without ridge are singular") {
    FpeEncoder enc = had(256, 9);
    std::vector<double> X = {0.3, 0.3, -0.5};
    std::vector<double> Y = {1.0, -1.0, 0.2};
    CHECK_THROWS_AS(
        regress_fit(X, Y, RegressMethod::tikhonov, 30.0, enc, 0.0),
        SingularSystem);
}

TEST_CASE("experiment sweep is deterministic and ordered") {
    auto a = regression_experiment({40}, {64}, 4, 11, 20.0, 30.0, 0.01, false);
    auto b = regression_experiment({40}, {64}, 4, 11, 20.0, 30.0, 0.01, true);
    REQUIRE(a.size() == 2);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].rmse == b[i].rmse);
        CHECK(std::isfinite(a[i].rmse));
        CHECK(a[i].k == 40);
        CHECK(a[i].n == 64);
    }
    CHECK(a[0].method == RegressMethod::empirical);
    CHECK(a[1].method == RegressMethod::tikhonov);
}

TEST_CASE("method names") {
    CHECK(method_name(RegressMethod::empirical) == "empirical");
    CHECK(method_name(RegressMethod::tikhonov) == "tikhonov");
}
