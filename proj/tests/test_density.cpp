#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vfa/density.hpp"

using namespace vfa;

namespace {

constexpr double pi = std::numbers::pi;

double sinc_n(double u) { return u == 0.0 ? 1.0 : std::sin(pi * u) / (pi * u); }

FpeEncoder had(std::size_t n, std::uint64_t seed) {
    return FpeEncoder::sample_base(PhaseDistribution::uniform(),
                                   Family::hadamard, n, seed);
}

double trapezoid(const std::function<double(double)>& f, double lo, double hi,
                 double step) {
    double acc = 0.0, prev = f(lo);
    for (double x = lo + step; x <= hi + 1e-12; x += step) {
        double cur = f(x);
        acc += 0.5 * (prev + cur) * step;
        prev = cur;
    }
    return acc;
}

}  // namespace

TEST_CASE("surrogate pdf is a normalized density") {
    double v0 = 0.078 * std::pow(1.0 + sinc_n(0.2) * sinc_n(0.2), 2.0);
    CHECK(surrogate_pdf(0.0) == doctest::Approx(v0));
    for (double x : {-30.0, -3.0, 0.5, 12.0}) CHECK(surrogate_pdf(x) >= 0.0);
    CHECK(trapezoid(surrogate_pdf, -200.0, 200.0, 0.01) ==
          doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("surrogate sampling follows the pdf") {
    Rng rng(31);
    auto samples = sample_surrogate(20000, rng);
    auto cdf_at = [&](double x) {
        return trapezoid(surrogate_pdf, -200.0, x, 0.01);
    };
    for (double x : {-5.0, -1.0, 0.0, 2.0, 6.0}) {
        double emp = double(std::count_if(samples.begin(), samples.end(),
                                          [&](double s) { return s <= x; })) /
                     double(samples.size());
        CHECK(std::abs(emp - cdf_at(x)) < 0.02);
    }
    Rng rng2(31);
    auto again = sample_surrogate(16, rng2);
    auto first = sample_surrogate(16, rng = Rng(31));
    for (std::size_t i = 0; i < 16; ++i) CHECK(again[i] == first[i]);
}

TEST_CASE("numeric fit satisfies the stationarity conditions") {
    Rng rng(5);
    auto samples = sample_surrogate(40, rng);
    NumericDensity nd = blml_fit_numeric(samples, 0.4);
    REQUIRE(nd.c_hat.size() == 40);
    for (double c : nd.c_hat) CHECK(c > 0.0);
    for (std::size_t i = 0; i < 40; ++i) {
        double q = 0.0;
        for (std::size_t j = 0; j < 40; ++j)
            q += nd.c_hat[j] * sinc_n(0.4 * (samples[i] - samples[j]));
        CHECK(q / 40.0 == doctest::Approx(1.0 / nd.c_hat[i]).epsilon(1e-6));
    }
}

TEST_CASE("the fitted density integrates to 1") {
    Rng rng(6);
    auto samples = sample_surrogate(60, rng);
    NumericDensity nd = blml_fit_numeric(samples, 0.4);
    double total = trapezoid([&](double r) { return blml_eval(nd, r); },
                             -120.0, 120.0, 0.02);
    CHECK(total == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("vector-based fit tracks the numeric route at large n") {
    Rng rng(7);
    auto samples = sample_surrogate(20, rng);
    FpeEncoder enc = had(8192, 11);
    DensityEstimator de = blml_fit(samples, 0.4, enc);
    NumericDensity nd = blml_fit_numeric(samples, 0.4);
    for (std::size_t j = 0; j < 20; ++j)
        CHECK(de.c_hat[j] == doctest::Approx(nd.c_hat[j]).epsilon(0.2));
    double worst = 0.0;
    for (double r = -5.0; r <= 5.0; r += 0.25)
        worst = std::max(worst, std::abs(blml_eval(de, r) - blml_eval(nd, r)));
    CHECK(worst < 0.05);
    CHECK(blml_residual(de) < 1e-6);
}

TEST_CASE("density readout is nonnegative everywhere") {
    Rng rng(8);
    auto samples = sample_surrogate(15, rng);
    DensityEstimator de = blml_fit(samples, 0.4, had(1024, 3));
    for (double r = -20.0; r <= 20.0; r += 0.5) CHECK(blml_eval(de, r) >= 0.0);
}

TEST_CASE("fit input validation") {
    FpeEncoder enc = had(64, 1);
    CHECK_THROWS_AS(blml_fit({}, 0.4, enc), EmptyInput);
    CHECK_THROWS_AS(blml_fit({1.0}, -0.4, enc), InvalidDensity);
    CHECK_THROWS_AS(blml_fit_numeric({}, 0.4), EmptyInput);
}

TEST_CASE("mise helper") {
    std::vector<double> grid = {0.0, 1.0, 2.0};
    auto zero = [](double) { return 0.0; };
    // A constant-1 curve over a length-2 interval integrates to 2.
    CHECK(mise({{1.0, 1.0, 1.0}}, zero, grid) == doctest::Approx(2.0));
    // Curves with non-finite values are skipped.
    double nan = std::nan("");
    CHECK(mise({{1.0, 1.0, 1.0}, {nan, 1.0, 1.0}}, zero, grid) ==
          doctest::Approx(2.0));
    CHECK_THROWS_AS(mise({{1.0, 1.0}}, zero, grid), GridMismatch);
    CHECK_THROWS_AS(mise({{nan, nan, nan}}, zero, grid), NoConvergence);
    CHECK_THROWS_AS(mise({}, zero, grid), EmptyInput);
}

TEST_CASE("density experiment runs deterministically") {
    auto a = density_experiment({12}, {64}, 3, 17, 0.4, false);
    auto b = density_experiment({12}, {64}, 3, 17, 0.4, true);
    REQUIRE(a.mise_numeric.size() == 1);
    REQUIRE(a.mise_vfa.size() == 1);
    CHECK(a.mise_numeric[0] == b.mise_numeric[0]);
    CHECK(a.mise_vfa[0][0] == b.mise_vfa[0][0]);
    CHECK(a.mise_numeric[0] > 0.0);
    CHECK(std::isfinite(a.mise_vfa[0][0]));
    CHECK(a.mise_vfa[0][0] >= a.mise_numeric[0] * 0.5);
}
