#include <cmath>
#include <random>

#include "doctest.h"
#include "pdfwm/errors.hpp"
#include "pdfwm/metrics.hpp"
#include "synth_images.hpp"

using namespace pdfwm;
using testsupport::random_image;
using testsupport::random_pattern;

TEST_SUITE_BEGIN("metrics");

TEST_CASE("hamming basics") {
    const auto m = random_pattern(8, 8, 1);
    CHECK(hamming(m, m) == 0.0);

    auto zeros = BinaryPattern::make(2, 2, 0);
    auto ones = BinaryPattern::make(2, 2, 1);
    CHECK(hamming(zeros, ones) == 1.0);

    auto a = BinaryPattern::make(2, 4, 0);
    auto b = a;
    b.at(1, 2) = 1;  // one of eight bits differs
    CHECK(hamming(a, b) == doctest::Approx(0.125).epsilon(1e-15));

    CHECK_THROWS_AS(hamming(a, BinaryPattern::make(4, 2, 0)),
                    DimensionMismatch);
    auto bad = BinaryPattern::make(2, 2, 0);
    bad.bits[0] = 2;
    CHECK_THROWS_AS(hamming(bad, zeros), NonBinaryInput);
}

TEST_CASE("hamming is a metric") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_pattern(6, 6, rng());
        const auto b = random_pattern(6, 6, rng());
        const auto c = random_pattern(6, 6, rng());
        CHECK(hamming(a, b) == hamming(b, a));
        CHECK(hamming(a, c) <= hamming(a, b) + hamming(b, c) + 1e-15);
        if (hamming(a, b) == 0.0) CHECK(a.bits == b.bits);
    }
}

TEST_CASE("rmse basics") {
    const auto img = random_image(5, 7, 1, 2);
    CHECK(rmse(img, img) == 0.0);

    auto a = RasterImage::make(1, 1, 1, 0);
    auto b = RasterImage::make(1, 1, 1, 10);
    CHECK(rmse(a, b) == doctest::Approx(10.0).epsilon(1e-15));

    // a binary pair with ham = 0.25 has rmse = 0.5
    auto p = BinaryPattern::make(2, 2, 0);
    auto q = p;
    q.at(0, 0) = 1;
    CHECK(hamming(p, q) == doctest::Approx(0.25));
    CHECK(rmse(p, q) == doctest::Approx(0.5).epsilon(1e-15));

    CHECK_THROWS_AS(rmse(a, RasterImage::make(2, 1, 1)), DimensionMismatch);
}

TEST_CASE("rmse squared equals hamming on binary pairs") {
    // exhaustive over all 2x2 patterns, 16*16 pairs
    for (int i = 0; i < 16; ++i) {
        for (int j = 0; j < 16; ++j) {
            auto a = BinaryPattern::make(2, 2);
            auto b = BinaryPattern::make(2, 2);
            for (int bit = 0; bit < 4; ++bit) {
                a.bits[bit] = (i >> bit) & 1;
                b.bits[bit] = (j >> bit) & 1;
            }
            const double r = rmse(a, b);
            CHECK(std::abs(r * r - hamming(a, b)) < 1e-12);
        }
    }
    std::mt19937 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_pattern(9, 5, rng());
        const auto b = random_pattern(9, 5, rng());
        const double r = rmse(a, b);
        CHECK(std::abs(r * r - hamming(a, b)) < 1e-12);
    }
}

TEST_CASE("psnr basics") {
    const auto img = random_image(8, 8, 3, 3);
    CHECK(std::isinf(psnr(img, img)));

    // force MSE = 2: half the pixels differ by 2
    auto a = RasterImage::make(2, 1, 1, 100);
    auto b = a;
    b.at(0, 0) = 102;
    CHECK(psnr(a, b) ==
          doctest::Approx(10.0 * std::log10(255.0 * 255.0 / 2.0))
              .epsilon(1e-12));

    CHECK_THROWS_AS(psnr(a, RasterImage::make(1, 2, 1)), DimensionMismatch);
}

TEST_CASE("relative entropy of identical images is zero") {
    const auto img = random_image(16, 16, 1, 4);
    CHECK(relative_entropy(img, img) < 1e-9);
    CHECK(relative_entropy(img, img) >= 0.0);
}

TEST_CASE("relative entropy point-mass vs uniform, against direct summation") {
    // A: every pixel 7. B: each intensity appears exactly once per row block
    auto a = RasterImage::make(256, 256, 1, 7);
    auto b = RasterImage::make(256, 256, 1);
    for (int y = 0; y < 256; ++y)
        for (int x = 0; x < 256; ++x)
            b.at(x, y) = static_cast<std::uint8_t>(x);

    // independent evaluation of the smoothed divergence
    const double omega = 256.0 * 256.0;
    const double eps = 1.0 / (omega * 256.0);
    const double norm = 1.0 + 256.0 * eps;
    double expected = 0.0;
    for (int i = 0; i < 256; ++i) {
        const double pi = ((i == 7 ? 1.0 : 0.0) + eps) / norm;
        const double qi = (1.0 / 256.0 + eps) / norm;
        expected += pi * std::log(pi / qi);
    }
    CHECK(relative_entropy(a, b) ==
          doctest::Approx(expected).epsilon(1e-12));
    // close to log(256) up to the smoothing correction
    CHECK(relative_entropy(a, b) > 0.9 * std::log(256.0));
    CHECK(relative_entropy(a, b) < std::log(256.0));
}

TEST_CASE("relative entropy is non-negative on random pairs") {
    std::mt19937 rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_image(12, 12, 1, rng());
        const auto b = random_image(12, 12, 1, rng());
        CHECK(relative_entropy(a, b) >= 0.0);
    }
}

TEST_CASE("report serialization, including the infinite-psnr sentinel") {
    DistortionReport r;
    r.psnr = std::numeric_limits<double>::infinity();
    r.rmse = 0.0;
    CHECK(r.to_text() == "rmse = 0\npsnr = inf\n");
    CHECK(r.to_json() == "{\"rmse\": 0, \"psnr\": \"inf\"}");

    DistortionReport m;
    m.ham = 0.125;
    CHECK(m.to_text() == "ham = 0.125\n");
    CHECK(m.to_json() == "{\"ham\": 0.125}");
}

TEST_CASE("compare_marks ties the identity together") {
    const auto a = random_pattern(16, 16, 77);
    auto b = a;
    b.at(3, 3) ^= 1;
    const DistortionReport r = compare_marks(a, b);
    REQUIRE(r.ham.has_value());
    REQUIRE(r.rmse.has_value());
    CHECK(std::abs(*r.rmse * *r.rmse - *r.ham) < 1e-12);
    REQUIRE(r.relent.has_value());
    CHECK(*r.relent >= 0.0);
}

TEST_SUITE_END();
