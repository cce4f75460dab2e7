#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "vfa/core.hpp"
#include "vfa/decode.hpp"

using namespace vfa;

namespace {

FpeEncoder had(std::size_t n, std::uint64_t seed) {
    return FpeEncoder::sample_base(PhaseDistribution::uniform(),
                                   Family::hadamard, n, seed);
}

}  // namespace

TEST_CASE("anchor construction and validation") {
    FpeEncoder enc = had(128, 1);
    AnchorCodebook cb = build_anchors(enc, 1.6, 5);
    REQUIRE(cb.anchors().size() == 5);
    for (std::size_t k = 0; k < 5; ++k)
        CHECK(cb.anchors()[k].value == doctest::Approx(1.6 * double(k + 1)));
    CHECK_THROWS_AS(build_anchors(enc, 0.0, 5), InvalidSpacing);
    CHECK_THROWS_AS(build_anchors(enc, 2.0, 5), InvalidSpacing);
    CHECK_THROWS_AS(build_anchors(enc, -1.0, 5), InvalidSpacing);
    CHECK_THROWS_AS(build_anchors(enc, 1.0, 0), InvalidSpacing);
}

TEST_CASE("readout peaks at the encoded value") {
    FpeEncoder enc = had(512, 2);
    HDVector x = enc.encode(4.2);
    CHECK(readout(enc, x, 4.2) == doctest::Approx(1.0));
    CHECK(std::abs(readout(enc, x, 9.0)) < 0.3);
}

TEST_CASE("readout derivative matches finite differences and is 0 at peak") {
    FpeEncoder enc = had(1024, 3);
    HDVector x = enc.encode(2.0);
    for (double s : {0.7, 1.5, 2.0, 3.1}) {
        double h = 1e-6;
        double fd = (readout(enc, x, s + h) - readout(enc, x, s - h)) / (2 * h);
        CHECK(readout_derivative(enc, x, s) == doctest::Approx(fd).epsilon(1e-5));
    }
    CHECK(std::abs(readout_derivative(enc, x, 2.0)) < 1e-10);
}

TEST_CASE("coarse match picks the nearest anchor") {
    FpeEncoder enc = had(2048, 4);
    AnchorCodebook cb = build_anchors(enc, 1.6, 10);
    CHECK(coarse_match(cb, enc.encode(1.7)) == 0);
    CHECK(coarse_match(cb, enc.encode(6.5)) == 3);
    CHECK(coarse_match(cb, enc.encode(15.9)) == 9);
    CHECK_THROWS_AS(coarse_match(cb, HDVector::zero(Family::hadamard, 64)),
                    DimensionMismatch);
}

TEST_CASE("fine match converges below 1e-5 on clean encodings") {
    FpeEncoder enc = had(512, 5);
    AnchorCodebook cb = build_anchors(enc, 1.6, 20);
    for (double r : {1.1, 4.44, 12.345, 27.8}) {
        HDVector x = enc.encode(r);
        double r_hat = fine_match(cb, x, coarse_match(cb, x));
        CHECK(std::abs(r_hat - r) < 1e-5);
    }
}

TEST_CASE("values beyond the codebook fail to bracket") {
    FpeEncoder enc = had(512, 6);
    AnchorCodebook cb = build_anchors(enc, 1.6, 5);  // covers up to 8
    // The readout rises monotonically toward the upper bracket edge 9.6.
    HDVector x = enc.encode(9.9);
    CHECK_THROWS_AS(fine_match(cb, x, 4), OptimizerDidNotBracket);
    CHECK_THROWS_AS(fine_match(cb, x, 7), std::out_of_range);
}

TEST_CASE("values below the first anchor stay reachable") {
    FpeEncoder enc = had(512, 7);
    AnchorCodebook cb = build_anchors(enc, 1.6, 5);
    HDVector x = enc.encode(0.4);
    double r_hat = fine_match(cb, x, coarse_match(cb, x));
    CHECK(std::abs(r_hat - 0.4) < 1e-5);
}

TEST_CASE("decode_point reports value and magnitude") {
    FpeEncoder enc = had(1024, 8);
    AnchorCodebook cb = build_anchors(enc, 1.6, 20);
    DecodeResult res = decode_point(cb, enc.encode(7.25));
    CHECK(std::abs(res.r_hat - 7.25) < 1e-5);
    CHECK(res.alpha_hat == doctest::Approx(1.0));
    // Scaling the vector scales the reported magnitude.
    cvec d = enc.encode(7.25).data();
    for (auto& v : d) v *= 0.6;
    DecodeResult scaled = decode_point(cb, HDVector(std::move(d),
                                                    Family::hadamard));
    CHECK(scaled.alpha_hat == doctest::Approx(0.6));
}

TEST_CASE("detect separates signal from noise") {
    FpeEncoder enc = had(1024, 9);
    AnchorCodebook cb = build_anchors(enc, 1.6, 20);
    CHECK(default_detect_threshold(1024) == doctest::Approx(4.0 / 32.0));
    CHECK(detect(cb, enc.encode(5.0)));
    // Unrelated random symbols read out near 0 everywhere.
    std::size_t false_accepts = 0;
    for (std::uint64_t s = 0; s < 20; ++s)
        if (detect(cb, random_symbol(1024, Family::hadamard, 5000 + s)))
            ++false_accepts;
    CHECK(false_accepts <= 2);
    // A permissive explicit threshold accepts anything.
    CHECK(detect(cb, random_symbol(1024, Family::hadamard, 1), 1e-6));
}

TEST_CASE("add_noise hits the requested power ratio") {
    FpeEncoder enc = had(8192, 10);
    HDVector x = enc.encode(3.0);
    Rng rng(77);
    HDVector y = add_noise(x, 10.0, rng);
    double noise = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) noise += std::norm(y[i] - x[i]);
    noise /= double(x.size());
    CHECK(noise == doctest::Approx(0.1).epsilon(0.05));
}

TEST_CASE("greedy peeling recovers separated terms, largest first") {
    FpeEncoder enc = had(4096, 11);
    AnchorCodebook cb = build_anchors(enc, 1.6, 20);
    FunctionVector y = from_samples(enc, {4.0, 12.5, 22.0}, {0.7, -1.2, 1.0});
    auto decoded = decode_function(cb, y, 5, 0.2);
    REQUIRE(decoded.size() == 3);
    CHECK(std::abs(decoded[0].first - 12.5) < 1e-2);
    CHECK(decoded[0].second == doctest::Approx(-1.2).epsilon(0.1));
    CHECK(std::abs(decoded[1].first - 22.0) < 1e-2);
    CHECK(std::abs(decoded[2].first - 4.0) < 1e-2);
    CHECK(std::abs(decoded[1].second) >= std::abs(decoded[2].second));
}

TEST_CASE("peeling stops at the threshold") {
    FpeEncoder enc = had(4096, 12);
    AnchorCodebook cb = build_anchors(enc, 1.6, 20);
    FunctionVector y = from_samples(enc, {8.0}, {1.0});
    auto decoded = decode_function(cb, y, 10, 0.2);
    REQUIRE(decoded.size() == 1);
    CHECK(std::abs(decoded[0].first - 8.0) < 1e-3);
}

TEST_CASE("cosine similarity") {
    HDVector a = random_symbol(256, Family::hadamard, 1);
    CHECK(cosine_similarity(a, a) == doctest::Approx(1.0));
    HDVector b = random_symbol(256, Family::hadamard, 2);
    CHECK(std::abs(cosine_similarity(a, b)) < 0.3);
    CHECK_THROWS_AS(
        cosine_similarity(a, random_symbol(128, Family::hadamard, 3)),
        DimensionMismatch);
}

TEST_CASE("point sweep: deterministic across thread counts") {
    auto a = decode_point_sweep({0.0}, {64}, 12, 42, 1.6, 20, false);
    auto b = decode_point_sweep({0.0}, {64}, 12, 42, 1.6, 20, true);
    REQUIRE(a.size() == 1);
    CHECK(a[0].rmse == b[0].rmse);
    CHECK(a[0].detect_rate == b[0].detect_rate);
    CHECK(a[0].rmse < 2.0);
    CHECK(a[0].detect_rate > 0.8);
}

TEST_CASE("function sweep returns sane similarities") {
    auto rows = decode_function_sweep({2}, {1024}, 10, 7);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].cosine_sim > 0.9);
}

TEST_CASE("peeling succeeds on well-separated supports") {
    CHECK(peel_success_rate(3, 512, 20, 21) >= 0.9);
}
