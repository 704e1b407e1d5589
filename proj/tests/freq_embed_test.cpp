#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "pdfwm/errors.hpp"
#include "pdfwm/freq_embed.hpp"
#include "pdfwm/metrics.hpp"
#include "synth_images.hpp"

using namespace pdfwm;
using testsupport::document_cover;
using testsupport::glyph_mark;
using testsupport::random_pattern;
using testsupport::spearman;

namespace {

Mat random_cover_mat(int rows, int cols, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, 255.0);
    Mat m(rows, cols);
    for (auto& v : m.data()) v = dist(rng);
    return m;
}

FreqParams params(const char* wavelet, double u, double a,
                  Band band = Band::cD) {
    FreqParams p;
    p.wavelet = WaveletSpec::parse(wavelet);
    p.band = band;
    p.fraction = u;
    p.brightness = a;
    return p;
}

}  // namespace

TEST_SUITE_BEGIN("freq");

TEST_CASE("select_region picks the top rows of the band") {
    RegionSpec r = select_region(100, 80, 0.9, 10, 10);
    CHECK(r.row_count == 90);
    CHECK(r.col_count == 80);  // 7200 of 8000 coefficients replaced

    r = select_region(10, 10, 1.0, 4, 4);
    CHECK(r.row_count == 10);
    CHECK(r.col_count == 10);

    r = select_region(64, 64, 0.5, 4, 4);
    CHECK(r.row_count == 32);
    CHECK(r.col_count == 64);

    CHECK_THROWS_AS(select_region(1, 64, 0.3, 4, 4), RegionTooSmall);
    CHECK_THROWS_AS(select_region(64, 64, 0.0, 4, 4), InvalidParams);
    CHECK_THROWS_AS(select_region(64, 64, 1.5, 4, 4), InvalidParams);
    CHECK_THROWS_AS(select_region(0, 64, 0.5, 4, 4), InvalidParams);
}

TEST_CASE("region never exceeds the requested fraction") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 128);
        const int cols = 1 + static_cast<int>(rng() % 128);
        const double u = std::uniform_real_distribution<double>(0.01, 1.0)(rng);
        try {
            const RegionSpec r = select_region(rows, cols, u, 4, 4);
            CHECK(r.row_count * r.col_count <=
                  u * rows * cols + cols);  // one row of slack
            CHECK(r.row_count <= rows);
            CHECK(r.col_count == cols);
        } catch (const RegionTooSmall&) {
            CHECK(static_cast<int>(u * rows) == 0);
        }
    }
}

TEST_CASE("a zero mark zeroes the selected region") {
    const auto p = params("db2", 0.6, 75.0);
    const Mat cover = random_cover_mat(40, 40, 17);
    const auto mark = BinaryPattern::make(6, 6, 0);
    const Mat stego = embed_frequency_real(cover, mark, p);
    const SubbandSet bands = dwt2(stego, p.wavelet);
    const Mat& band = select_band(bands, p.band);
    const RegionSpec region =
        select_region(band.rows(), band.cols(), p.fraction, 6, 6);
    for (int r = 0; r < region.row_count; ++r)
        for (int c = 0; c < region.col_count; ++c)
            CHECK(std::abs(band.at(r, c)) < 1e-9);
}

TEST_CASE("real-valued round trip recovers the mark exactly") {
    std::mt19937 rng(23);
    for (const char* wavelet : {"db1", "db2", "db6", "sym4"}) {
        for (double u : {0.3, 0.5, 1.0}) {
            for (double a : {10.0, 20.0, 150.0}) {
                const auto p = params(wavelet, u, a);
                const Mat cover = random_cover_mat(64, 64, rng());
                // keep the mark within the region so resampling is lossless
                const RegionSpec region = select_region(
                    32, 32, u, 1, 1);
                const auto mark =
                    random_pattern(region.row_count, 32, rng());
                const Mat stego = embed_frequency_real(cover, mark, p);
                const auto detected = detect_frequency_real(
                    stego, p, mark.rows, mark.cols);
                CAPTURE(wavelet);
                CAPTURE(u);
                CAPTURE(a);
                CHECK(hamming(mark, detected) == 0.0);
            }
        }
    }
}

TEST_CASE("covers too small for the fraction raise RegionTooSmall") {
    const auto p = params("db1", 0.3, 20.0);
    const auto cover = testsupport::random_image(2, 2, 1, 33);  // band is 1x1
    const auto mark = BinaryPattern::make(1, 1, 1);
    CHECK_THROWS_AS(embed_frequency(cover, mark, p), RegionTooSmall);
    CHECK_THROWS_AS(detect_frequency(cover, p, 1, 1), RegionTooSmall);
}

TEST_CASE("odd cover heights round-trip exactly when the region clears the pad") {
    // padding affects the last band rows only; the top-row region stays
    // clear of them, so cropping and re-padding cancel out
    const auto p = params("db3", 0.5, 25.0);
    const Mat cover = random_cover_mat(45, 38, 34);  // bands are 23x19
    const auto mark = random_pattern(11, 19, 35);
    const Mat stego = embed_frequency_real(cover, mark, p);
    REQUIRE(stego.rows() == 45);
    REQUIRE(stego.cols() == 38);
    CHECK(hamming(mark, detect_frequency_real(stego, p, 11, 19)) == 0.0);
}

TEST_CASE("odd cover widths leak pad error into the last band columns") {
    // with an odd width every region row touches the padded column, so the
    // crop/re-pad round trip is no longer exact; the damage is confined to
    // the trailing columns of the recovered mark
    const auto p = params("db3", 0.5, 25.0);
    const Mat cover = random_cover_mat(45, 37, 36);
    const auto mark = random_pattern(11, 19, 37);
    const Mat stego = embed_frequency_real(cover, mark, p);
    const auto detected = detect_frequency_real(stego, p, 11, 19);
    for (int r = 0; r < 11; ++r)
        for (int c = 0; c < 16; ++c)  // db3 windows reach 3 columns back
            CHECK(detected.at(r, c) == mark.at(r, c));
}

TEST_CASE("mark smaller than the region also survives exactly") {
    const auto p = params("db2", 0.5, 20.0);
    const Mat cover = random_cover_mat(64, 64, 31);
    const auto mark = random_pattern(7, 13, 32);  // region is 16x32
    const Mat stego = embed_frequency_real(cover, mark, p);
    CHECK(hamming(mark, detect_frequency_real(stego, p, 7, 13)) == 0.0);
}

TEST_CASE("bands other than cD carry marks too") {
    for (Band band : {Band::cA, Band::cH, Band::cV}) {
        auto p = params("db2", 0.5, 60.0, band);
        const Mat cover = random_cover_mat(32, 32, 41);
        const auto mark = random_pattern(8, 16, 42);
        const Mat stego = embed_frequency_real(cover, mark, p);
        CHECK(hamming(mark, detect_frequency_real(stego, p, 8, 16)) == 0.0);
    }
}

TEST_CASE("all-ones mark at a=100 survives 8-bit quantization") {
    const auto p = params("db1", 0.5, 100.0);
    const auto cover = testsupport::random_image(16, 16, 1, 51);
    const auto mark = BinaryPattern::make(4, 8, 1);
    const auto stego = embed_frequency(cover, mark, p);
    const auto detected = detect_frequency(stego, p, 4, 8);
    CHECK(hamming(mark, detected) < 0.01);
}

TEST_CASE("document covers at a=20 detect under 5 percent error with db1") {
    const auto p = params("db1", 0.5, 20.0);
    const auto cover = document_cover(200, 160, 61);
    const auto mark = glyph_mark(32, 64, 62);
    const auto stego = embed_frequency(cover, mark, p);
    const auto detected = detect_frequency(stego, p, 32, 64);
    CHECK(hamming(mark, detected) < 0.05);
}

TEST_CASE("brightness drives visibility: a=150 distorts more than a=50") {
    const auto cover = document_cover(128, 128, 71);
    const auto mark = glyph_mark(16, 32, 72);
    const auto lo = embed_frequency(cover, mark, params("db1", 0.7, 50.0));
    const auto hi = embed_frequency(cover, mark, params("db1", 0.7, 150.0));
    CHECK(psnr(cover, hi) < psnr(cover, lo));
    CHECK(rmse(cover, hi) > rmse(cover, lo));
}

TEST_CASE("image distortion grows with brightness") {
    // the stego image degrades monotonically with a; the extracted-mark
    // error trend is exercised by the acceptance suite
    const auto cover = testsupport::photo_cover(128, 128, 81);
    const auto mark = glyph_mark(16, 32, 82);
    std::vector<double> as, rmses;
    for (double a = 20.0; a <= 300.0; a += 40.0) {
        const auto p = params("db1", 0.5, a);
        const auto stego = embed_frequency(cover, mark, p);
        as.push_back(a);
        rmses.push_back(rmse(cover, stego));
    }
    CHECK(spearman(as, rmses) > 0.9);
}

TEST_CASE("channel policies on color covers") {
    const auto cover = document_cover(64, 64, 91, 3);
    const auto mark = random_pattern(8, 16, 92);

    auto blue = params("db1", 0.5, 40.0);
    blue.channels = ChannelPolicy::single(2);
    const auto s1 = embed_frequency(cover, mark, blue);
    for (int y = 0; y < 64; ++y) {
        for (int x = 0; x < 64; ++x) {
            CHECK(s1.at(x, y, 0) == cover.at(x, y, 0));
            CHECK(s1.at(x, y, 1) == cover.at(x, y, 1));
        }
    }
    CHECK(hamming(mark, detect_frequency(s1, blue, 8, 16)) < 0.05);

    auto all = params("db1", 0.5, 40.0);
    all.channels = ChannelPolicy::all();
    const auto s2 = embed_frequency(cover, mark, all);
    CHECK(hamming(mark, detect_frequency(s2, all, 8, 16)) < 0.05);
}

TEST_CASE("parameter validation") {
    auto p = params("db1", 0.5, 20.0);
    p.fraction = 0.0;
    CHECK_THROWS_AS(p.validate(), InvalidParams);
    p.fraction = 1.5;
    CHECK_THROWS_AS(p.validate(), InvalidParams);
    p.fraction = 0.5;
    p.brightness = 0.0;
    CHECK_THROWS_AS(p.validate(), InvalidParams);
}

TEST_SUITE_END();
