#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "vfa/core.hpp"
#include "vfa/function_vector.hpp"

using namespace vfa;

namespace {

constexpr double pi = std::numbers::pi;

double sinc_pi(double d) { return d == 0.0 ? 1.0 : std::sin(pi * d) / (pi * d); }

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

}  // namespace

TEST_CASE("from_samples validates its input") {
    FpeEncoder enc = had(64, 1);
    CHECK_THROWS_AS(from_samples(enc, {1.0, 2.0}, {1.0}), LengthMismatch);
    CHECK_THROWS_AS(from_samples(enc, std::vector<double>{},
                                 std::vector<double>{}),
                    EmptyInput);
}

TEST_CASE("a single delta evaluates to the kernel") {
    FpeEncoder enc = had(4096, 2);
    FunctionVector f = from_samples(enc, {3.0}, {1.0});
    CHECK(eval(f, 3.0) == doctest::Approx(1.0));
    for (double s : {0.0, 1.5, 3.5, 5.0})
        CHECK(eval(f, s) == doctest::Approx(sinc_pi(3.0 - s)).epsilon(0.1));
}

TEST_CASE("eval matches the kernel-space oracle") {
    FpeEncoder enc = had(4096, 3);
    std::vector<double> pts = {-4.0, -1.0, 0.5, 2.0, 6.0};
    std::vector<double> coef = {1.0, -0.5, 2.0, 0.8, -1.2};
    FunctionVector f = from_samples(enc, pts, coef);
    for (double s : linspace(-6.0, 8.0, 0.7))
        CHECK(std::abs(eval(f, s) - oracle_eval(sinc_pi, f.terms(), s)) < 0.08);
}

TEST_CASE("add superposes and enforces matching encoders") {
    FpeEncoder enc = had(2048, 4);
    FunctionVector f = from_samples(enc, {-2.0}, {1.0});
    FunctionVector g = from_samples(enc, {2.0}, {0.5});
    FunctionVector h = add(f, g);
    CHECK(h.terms().size() == 2);
    for (double s : {-2.0, 0.0, 2.0})
        CHECK(eval(h, s) == doctest::Approx(eval(f, s) + eval(g, s)).epsilon(1e-9));
    FunctionVector other = from_samples(had(2048, 5), {0.0}, {1.0});
    CHECK_THROWS_AS(add(f, other), EncoderMismatch);
}

TEST_CASE("shift moves the argument exactly") {
    FpeEncoder enc = had(1024, 6);
    FunctionVector f = from_samples(enc, {1.0, 4.0}, {1.0, -0.7});
    FunctionVector g = shift(f, 2.5);
    for (double s : {-1.0, 0.5, 2.0, 3.5})
        CHECK(eval(g, s) == doctest::Approx(eval(f, s + 2.5)).epsilon(1e-10));
    // Same components as re-encoding the moved support points.
    FunctionVector direct = from_samples(enc, {-1.5, 1.5}, {1.0, -0.7});
    CHECK(max_abs_diff(g.vec(), direct.vec()) < 1e-12);
    REQUIRE(g.terms().size() == 2);
    CHECK(g.terms()[0].r[0] == doctest::Approx(-1.5));
    CHECK_THROWS_AS(shift(f, {1.0, 2.0}), ArityMismatch);
}

TEST_CASE("convolve realizes the kernel-sum of supports") {
    FpeEncoder enc = had(4096, 7);
    FunctionVector f = from_samples(enc, {1.0, -2.0}, {1.0, 0.5});
    FunctionVector g = from_samples(enc, {3.0}, {2.0});
    FunctionVector c = convolve(f, g);
    REQUIRE(c.terms().size() == 2);
    for (double u : {-1.0, 1.0, 4.0, 6.0}) {
        double expect = 1.0 * 2.0 * sinc_pi(1.0 + 3.0 - u) +
                        0.5 * 2.0 * sinc_pi(-2.0 + 3.0 - u);
        CHECK(std::abs(eval(c, u) - expect) < 0.08);
    }
}

TEST_CASE("f_inner estimates the pairwise kernel sum") {
    FpeEncoder enc = had(8192, 8);
    FunctionVector f = from_samples(enc, {0.0, 5.0}, {1.0, -1.0});
    FunctionVector g = from_samples(enc, {0.0}, {2.0});
    double expect = 2.0 * sinc_pi(0.0) - 2.0 * sinc_pi(5.0);
    CHECK(std::abs(f_inner(f, g) - expect) < 0.08);
    // Deltas reproduce the kernel itself.
    FunctionVector da = from_samples(enc, {1.25}, {1.0});
    FunctionVector db = from_samples(enc, {2.25}, {1.0});
    CHECK(std::abs(f_inner(da, db) - sinc_pi(1.0)) < 0.08);
    CHECK(f_inner(da, da) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("term tracking caps at 64 combined terms") {
    FpeEncoder enc = had(256, 9);
    std::vector<double> pts(9), coef(9, 0.1);
    for (int i = 0; i < 9; ++i) pts[i] = double(i);
    FunctionVector f = from_samples(enc, pts, coef);
    FunctionVector c = convolve(f, f);  // 81 products
    CHECK_FALSE(c.has_terms());
    FunctionVector c2 = convolve(from_samples(enc, {0.0}, {1.0}), f);
    CHECK(c2.terms().size() == 9);
}

TEST_CASE("multi-dimensional functions evaluate through any encoder") {
    MultiEncoder enc = MultiEncoder::cartesian({had(2048, 10), had(2048, 11)});
    FunctionVector f =
        from_samples(AnyEncoder{enc}, {{1.0, -1.0}, {3.0, 2.0}}, {1.0, 0.5});
    double expect = 1.0 * sinc_pi(0.0) * sinc_pi(0.0) +
                    0.5 * sinc_pi(-2.0) * sinc_pi(-3.0);
    CHECK(std::abs(eval(f, {1.0, -1.0}) - expect) < 0.1);
    FunctionVector g = shift(f, {1.0, 1.0});
    CHECK(std::abs(eval(g, {0.0, -2.0}) - eval(f, {1.0, -1.0})) < 1e-9);
}

TEST_CASE("same_encoder distinguishes seeds and kinds") {
    FpeEncoder a = had(64, 1);
    CHECK(same_encoder(AnyEncoder{a}, AnyEncoder{had(64, 1)}));
    CHECK_FALSE(same_encoder(AnyEncoder{a}, AnyEncoder{had(64, 2)}));
    MultiEncoder m = MultiEncoder::cartesian({had(64, 1), had(64, 2)});
    CHECK_FALSE(same_encoder(AnyEncoder{a}, AnyEncoder{m}));
    CHECK(same_encoder(AnyEncoder{m},
                       AnyEncoder{MultiEncoder::cartesian({had(64, 1),
                                                           had(64, 2)})}));
}

TEST_CASE("serialization round-trips bit for bit") {
    FpeEncoder enc = had(256, 12);
    FunctionVector f = from_samples(enc, {1.0, -3.5}, {0.25, 1.5});
    std::stringstream buf;
    f.save(buf);
    FunctionVector g = FunctionVector::load(buf);
    CHECK(max_abs_diff(f.vec(), g.vec()) == 0.0);
    REQUIRE(g.terms().size() == 2);
    CHECK(g.terms()[1].r[0] == -3.5);
    CHECK(g.terms()[1].alpha == 1.5);
    CHECK(same_encoder(f.encoder(), g.encoder()));
    CHECK(eval(g, 1.0) == eval(f, 1.0));
}

TEST_CASE("serialization covers multi encoders and rejects joint2d") {
    MultiEncoder enc = MultiEncoder::cartesian({had(128, 13), had(128, 14)});
    FunctionVector f =
        from_samples(AnyEncoder{enc}, {{0.5, 1.5}}, {1.0});
    std::stringstream buf;
    f.save(buf);
    FunctionVector g = FunctionVector::load(buf);
    CHECK(max_abs_diff(f.vec(), g.vec()) == 0.0);
    CHECK(same_encoder(f.encoder(), g.encoder()));

    MultiEncoder j = MultiEncoder::joint2d(32, hexagon_joint_phases, 5);
    FunctionVector h = from_samples(AnyEncoder{j}, {{0.0, 0.0}}, {1.0});
    std::stringstream sink;
    CHECK_THROWS(h.save(sink));
}

TEST_CASE("load rejects garbage") {
    std::stringstream buf;
    buf << "not a record";
    CHECK_THROWS(FunctionVector::load(buf));
}
