#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "vfa/core.hpp"
#include "vfa/shaping.hpp"

using namespace vfa;

namespace {

constexpr double pi = std::numbers::pi;

double sinc_n(double u) {
    return u == 0.0 ? 1.0 : std::sin(pi * u) / (pi * u);
}

double max_abs_diff(const HDVector& x, const HDVector& y) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        m = std::max(m, std::abs(x[i] - y[i]));
    return m;
}

FpeEncoder had(std::size_t n, std::uint64_t seed) {
    return FpeEncoder::sample_base(PhaseDistribution::uniform(),
                                   Family::hadamard, n, seed);
}

FpeEncoder circ(std::size_t n, std::uint64_t seed) {
    return FpeEncoder::sample_base(PhaseDistribution::uniform(),
                                   Family::circular, n, seed);
}

}  // namespace

TEST_CASE("hex projection directions sum to zero") {
    for (int c = 0; c < 2; ++c) {
        double s = hex_xi[0][c] + hex_xi[1][c] + hex_xi[2][c];
        CHECK(s == doctest::Approx(0.0).epsilon(1e-15));
    }
}

TEST_CASE("sinc_hex matches a hand-expanded point and is 1 at the origin") {
    CHECK(sinc_hex(0.0, 0.0) == doctest::Approx(1.0));
    double x = 1.3, y = -0.7;
    double p0 = hex_xi[0][0] * x + hex_xi[0][1] * y;
    double p1 = hex_xi[1][0] * x + hex_xi[1][1] * y;
    double p2 = hex_xi[2][0] * x + hex_xi[2][1] * y;
    double expect = (std::cos(pi * p0) * sinc_n(p1) * sinc_n(p2) +
                     std::cos(pi * p1) * sinc_n(p2) * sinc_n(p0) +
                     std::cos(pi * p2) * sinc_n(p0) * sinc_n(p1)) /
                    3.0;
    CHECK(sinc_hex(x, y) == doctest::Approx(expect));
}

TEST_CASE("sinc_hex is invariant under 60-degree rotation") {
    double c = 0.5, s = std::sqrt(3.0) / 2.0;
    for (double r : {0.8, 2.1, 4.4}) {
        double x = r * 0.37, y = r * 0.91;
        double xr = c * x - s * y, yr = s * x + c * y;
        CHECK(sinc_hex(xr, yr) == doctest::Approx(sinc_hex(x, y)).epsilon(1e-9));
    }
}

TEST_CASE("hexagon membership at vertices, interior, and exterior") {
    CHECK(inside_hexagon(0.0, 0.0));
    CHECK(inside_hexagon(pi, 0.0));
    CHECK(inside_hexagon(-pi / 2.0, std::sqrt(3.0) / 2.0 * pi));
    CHECK_FALSE(inside_hexagon(pi, 0.1));
    CHECK_FALSE(inside_hexagon(0.0, 0.9 * pi));
    CHECK_FALSE(inside_hexagon(3.0, 1.5));
}

TEST_CASE("hexagon acceptance rate near 3*sqrt(3)/8") {
    Rng rng(7);
    std::size_t in = 0, total = 200000;
    for (std::size_t i = 0; i < total; ++i)
        if (inside_hexagon(rng.uniform_phase(), rng.uniform_phase())) ++in;
    double rate = double(in) / double(total);
    CHECK(rate == doctest::Approx(3.0 * std::sqrt(3.0) / 8.0).epsilon(0.01));
}

TEST_CASE("hexagon_joint_phases stays inside and is deterministic") {
    PhasePair p = hexagon_joint_phases(512, 42);
    REQUIRE(p.x.size() == 512);
    REQUIRE(p.y.size() == 512);
    for (std::size_t i = 0; i < 512; ++i)
        CHECK(inside_hexagon(p.x[i], p.y[i]));
    PhasePair q = hexagon_joint_phases(512, 42);
    for (std::size_t i = 0; i < 512; ++i) {
        CHECK(p.x[i] == q.x[i]);
        CHECK(p.y[i] == q.y[i]);
    }
}

TEST_CASE("lattice_phases draws from the lattice and validates input") {
    std::array<double, 2> b1{pi / 2.0, 0.0}, b2{0.0, pi / 2.0};
    PhasePair p = lattice_phases(b1, b2, 2, 256, 3);
    for (std::size_t i = 0; i < 256; ++i) {
        double qx = p.x[i] / (pi / 2.0), qy = p.y[i] / (pi / 2.0);
        CHECK(qx == doctest::Approx(std::round(qx)).epsilon(1e-12));
        CHECK(qy == doctest::Approx(std::round(qy)).epsilon(1e-12));
    }
    // A basis whose nonzero points all land outside keeps only the origin.
    PhasePair far = lattice_phases({10.0, 0.0}, {0.0, 10.0}, 1, 16, 1,
                                   std::vector<double>{}, 0.0);
    for (std::size_t i = 0; i < 16; ++i) {
        CHECK(far.x[i] == 0.0);
        CHECK(far.y[i] == 0.0);
    }
    CHECK_THROWS_AS(lattice_phases(b1, b2, 1, 16, 1, {1.0, 2.0}),
                    LengthMismatch);
}

TEST_CASE("lattice weights concentrate the draw") {
    std::array<double, 2> b1{pi, 0.0}, b2{0.0, pi};
    // 3x3 points; weight only the origin.
    std::vector<double> w(9, 0.0);
    w[4] = 1.0;
    PhasePair p = lattice_phases(b1, b2, 1, 64, 5, w);
    for (std::size_t i = 0; i < 64; ++i) {
        CHECK(p.x[i] == doctest::Approx(0.0));
        CHECK(p.y[i] == doctest::Approx(0.0));
    }
}

TEST_CASE("cartesian encoder is the bind of its parts") {
    MultiEncoder enc = MultiEncoder::cartesian({had(64, 1), had(64, 2)});
    CHECK(enc.arity() == 2);
    CHECK(enc.dim() == 64);
    HDVector joint = enc.encode({1.5, -2.25});
    HDVector manual = bind(enc.parts()[0].encode(1.5),
                           enc.parts()[1].encode(-2.25));
    CHECK(max_abs_diff(joint, manual) == doctest::Approx(0.0));
    CHECK(std::abs(inner(joint, joint) - cplx{1.0, 0.0}) < 1e-12);
}

TEST_CASE("cartesian exponent addition holds per axis") {
    MultiEncoder enc = MultiEncoder::cartesian({had(128, 3), had(128, 4)});
    HDVector a = enc.encode({1.25, 0.5});
    HDVector b = enc.encode({-0.75, 2.0});
    HDVector sum = enc.encode({0.5, 2.5});
    CHECK(max_abs_diff(bind(a, b), sum) < 1e-12);
}

TEST_CASE("factory validation") {
    CHECK_THROWS_AS(MultiEncoder::cartesian({}), ArityMismatch);
    CHECK_THROWS_AS(MultiEncoder::cartesian({had(64, 1), had(32, 2)}),
                    EncoderMismatch);
    CHECK_THROWS_AS(MultiEncoder::cartesian({had(64, 1), circ(64, 2)}),
                    EncoderMismatch);
    CHECK_THROWS_AS(MultiEncoder::hex_concat(circ(64, 1), circ(64, 2)),
                    EncoderMismatch);
    CHECK_THROWS_AS(MultiEncoder::hex_concat(had(64, 1), had(32, 2)),
                    EncoderMismatch);
    CHECK_THROWS_AS(
        MultiEncoder::hex_cc_projection(had(64, 1), circ(64, 2), circ(64, 3)),
        EncoderMismatch);
}

TEST_CASE("arity check on encode") {
    MultiEncoder enc = MultiEncoder::cartesian({had(32, 1), had(32, 2)});
    CHECK_THROWS_AS(enc.encode({1.0}), ArityMismatch);
    CHECK_THROWS_AS(enc.encode({1.0, 2.0, 3.0}), ArityMismatch);
}

TEST_CASE("joint2d encoding is unitary with exact exponent addition") {
    MultiEncoder enc = MultiEncoder::joint2d(256, hexagon_joint_phases, 11);
    CHECK(enc.dim() == 256);
    HDVector zero = enc.encode({0.0, 0.0});
    for (std::size_t i = 0; i < zero.size(); ++i)
        CHECK(std::abs(zero[i] - cplx{1.0, 0.0}) < 1e-15);
    HDVector a = enc.encode({0.7, -1.1});
    HDVector b = enc.encode({1.3, 0.4});
    CHECK(max_abs_diff(bind(a, b), enc.encode({2.0, -0.7})) < 1e-12);
}

TEST_CASE("hex_concat layout and self-similarity") {
    MultiEncoder enc = MultiEncoder::hex_concat(had(64, 6), had(64, 7));
    CHECK(enc.dim() == 192);
    CHECK(enc.arity() == 2);
    HDVector v = enc.encode({0.9, 1.7});
    CHECK(std::abs(inner(v, v) - cplx{1.0, 0.0}) < 1e-12);
    // Each component is a unit phasor.
    for (std::size_t i = 0; i < v.size(); ++i)
        CHECK(std::abs(v[i]) == doctest::Approx(1.0));
}

TEST_CASE("hex_cc_projection binds three circular projections") {
    MultiEncoder enc =
        MultiEncoder::hex_cc_projection(circ(64, 1), circ(64, 2), circ(64, 3));
    CHECK(enc.dim() == 64);
    HDVector v = enc.encode({1.1, -0.4});
    CHECK(std::abs(inner(v, v) - cplx{1.0, 0.0}) < 1e-9);
    HDVector manual = bind(
        bind(enc.parts()[0].encode(hex_xi[0][0] * 1.1 + hex_xi[0][1] * -0.4),
             enc.parts()[1].encode(hex_xi[1][0] * 1.1 + hex_xi[1][1] * -0.4)),
        enc.parts()[2].encode(hex_xi[2][0] * 1.1 + hex_xi[2][1] * -0.4));
    CHECK(max_abs_diff(v, manual) < 1e-12);
}

TEST_CASE("tensor encoding agrees with per-axis inner products") {
    FpeEncoder ex = had(96, 8), ey = had(96, 9);
    auto t1 = tensor_encode(ex, ey, 0.4, 1.2);
    auto t2 = tensor_encode(ex, ey, 1.0, -0.3);
    cplx ti = tensor_inner(t1, t2);
    cplx expect = inner(ex.encode(0.4), ex.encode(1.0)) *
                  std::conj(inner(ey.encode(1.2), ey.encode(-0.3)));
    CHECK(std::abs(ti - expect) < 1e-12);
    CHECK(std::abs(tensor_inner(t1, t1) - cplx{1.0, 0.0}) < 1e-12);
    CHECK_THROWS_AS(tensor_encode(circ(96, 1), ey, 0.0, 0.0), FamilyMismatch);
}

TEST_CASE("2-D kernel estimate approaches the separable sinc") {
    MultiEncoder enc = MultiEncoder::cartesian({had(512, 21), had(512, 22)});
    std::vector<double> grid = linspace(-3.0, 3.0, 0.5);
    Kernel2DEstimate est = estimate_kernel_2d(enc, grid, grid, 25, 77);
    REQUIRE(est.mean.size() == grid.size() * grid.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = 0; j < grid.size(); ++j)
            worst = std::max(worst, std::abs(est.mean_at(i, j) -
                                             sinc_n(grid[i]) * sinc_n(grid[j])));
    CHECK(worst < 0.05);
    double total = 0.0;
    for (double p : est.power) total += p;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("2-D kernel estimate: serial and parallel agree bit for bit") {
    MultiEncoder enc = MultiEncoder::cartesian({had(128, 31), had(128, 32)});
    std::vector<double> grid = linspace(-2.0, 2.0, 1.0);
    Kernel2DEstimate a = estimate_kernel_2d(enc, grid, grid, 8, 5, false);
    Kernel2DEstimate b = estimate_kernel_2d(enc, grid, grid, 8, 5, true);
    for (std::size_t c = 0; c < a.mean.size(); ++c) CHECK(a.mean[c] == b.mean[c]);
}

TEST_CASE("hex_concat kernel approaches sinc_hex") {
    MultiEncoder enc = MultiEncoder::hex_concat(had(1024, 41), had(1024, 42));
    std::vector<double> gx = {-2.0, -1.0, 0.0, 0.7, 1.9};
    std::vector<double> gy = {-1.5, 0.0, 0.8, 2.2};
    Kernel2DEstimate est = estimate_kernel_2d(enc, gx, gy, 20, 88);
    for (std::size_t i = 0; i < gx.size(); ++i)
        for (std::size_t j = 0; j < gy.size(); ++j)
            CHECK(std::abs(est.mean_at(i, j) - sinc_hex(gx[i], gy[j])) < 0.05);
}

TEST_CASE("resample keeps configuration but changes phases") {
    MultiEncoder enc = MultiEncoder::cartesian({had(64, 1), had(64, 2)});
    MultiEncoder fresh = enc.resample(99);
    CHECK(fresh.mode_name() == "cartesian");
    CHECK(fresh.dim() == enc.dim());
    CHECK(max_abs_diff(enc.encode({1.0, 1.0}), fresh.encode({1.0, 1.0})) > 0.1);

    MultiEncoder j = MultiEncoder::joint2d(64, hexagon_joint_phases, 1);
    MultiEncoder j2 = j.resample(2);
    CHECK(j2.dim() == 64);
    CHECK(max_abs_diff(j.encode({1.0, 0.0}), j2.encode({1.0, 0.0})) > 0.1);
}
