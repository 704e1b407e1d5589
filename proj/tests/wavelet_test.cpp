#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "pdfwm/errors.hpp"
#include "pdfwm/wavelet.hpp"

using namespace pdfwm;

namespace {

const double kSqrt2 = std::sqrt(2.0);

Mat random_mat(int rows, int cols, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, 255.0);
    Mat m(rows, cols);
    for (auto& v : m.data()) v = dist(rng);
    return m;
}

double max_abs_diff(const Mat& a, const Mat& b) {
    REQUIRE(a.same_dims(b));
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    return worst;
}

double sum_squares(const Mat& m) {
    double acc = 0.0;
    for (double v : m.data()) acc += v * v;
    return acc;
}

std::vector<WaveletSpec> all_supported() {
    std::vector<WaveletSpec> out;
    for (int p = 1; p <= 45; ++p)
        out.push_back(WaveletSpec{WaveletFamily::db, p});
    for (int p = 2; p <= 20; ++p)
        out.push_back(WaveletSpec{WaveletFamily::sym, p});
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("wavelet");

TEST_CASE("db1 filters have the Haar closed form") {
    const FilterBank fb = build_filters(WaveletSpec::parse("db1"));
    REQUIRE(fb.analysis_lo.size() == 2);
    CHECK(fb.analysis_lo[0] == doctest::Approx(1.0 / kSqrt2).epsilon(1e-14));
    CHECK(fb.analysis_lo[1] == doctest::Approx(1.0 / kSqrt2).epsilon(1e-14));
    CHECK(fb.analysis_hi[0] == doctest::Approx(1.0 / kSqrt2).epsilon(1e-14));
    CHECK(fb.analysis_hi[1] == doctest::Approx(-1.0 / kSqrt2).epsilon(1e-14));
    // orthogonality of the pair
    CHECK(std::abs(fb.analysis_lo[0] * fb.analysis_hi[0] +
                   fb.analysis_lo[1] * fb.analysis_hi[1]) < 1e-15);
}

TEST_CASE("db2 matches the published Daubechies-2 filter") {
    const FilterBank fb = build_filters(WaveletSpec::parse("db2"));
    REQUIRE(fb.analysis_lo.size() == 4);
    // first ten digits as printed in the standard tables
    const double published[4] = {0.4829629131, 0.8365163037, 0.2241438680,
                                 -0.1294095226};
    for (int i = 0; i < 4; ++i)
        CHECK(fb.analysis_lo[i] ==
              doctest::Approx(published[i]).epsilon(1e-9));
    double sum = 0, energy = 0;
    for (double h : fb.analysis_lo) {
        sum += h;
        energy += h * h;
    }
    CHECK(sum == doctest::Approx(kSqrt2).epsilon(1e-13));
    CHECK(energy == doctest::Approx(1.0).epsilon(1e-13));
    // two vanishing moments of the mirror filter pin db2 up to reversal
    double m0 = 0, m1 = 0;
    for (std::size_t n = 0; n < 4; ++n) {
        m0 += fb.analysis_hi[n];
        m1 += static_cast<double>(n) * fb.analysis_hi[n];
    }
    CHECK(std::abs(m0) < 1e-12);
    CHECK(std::abs(m1) < 1e-12);
}

TEST_CASE("sym4 matches the published least-asymmetric filter") {
    const FilterBank fb = build_filters(WaveletSpec::parse("sym4"));
    const double published[8] = {0.0322231006, -0.0126039673, -0.0992195436,
                                 0.2978577956, 0.8037387518, 0.4976186676,
                                 -0.0296355276, -0.0757657148};
    REQUIRE(fb.analysis_lo.size() == 8);
    for (int i = 0; i < 8; ++i)
        CHECK(fb.analysis_lo[i] ==
              doctest::Approx(published[i]).epsilon(1e-8));
}

TEST_CASE("every supported wavelet satisfies the filter-bank identities") {
    for (const WaveletSpec& spec : all_supported()) {
        CAPTURE(spec.name());
        const FilterBank fb = build_filters(spec);
        const auto& lo = fb.analysis_lo;
        const auto& hi = fb.analysis_hi;
        REQUIRE(static_cast<int>(lo.size()) == 2 * spec.order);

        double sum = 0;
        for (double h : lo) sum += h;
        CHECK(std::abs(sum - kSqrt2) < 1e-10);

        double dot = 0;
        for (std::size_t n = 0; n < lo.size(); ++n) dot += lo[n] * hi[n];
        CHECK(std::abs(dot) < 1e-10);

        // orthonormal shifts, the property perfect reconstruction rests on
        for (std::size_t k = 0; 2 * k < lo.size(); ++k) {
            double acc = 0;
            for (std::size_t n = 0; n + 2 * k < lo.size(); ++n)
                acc += lo[n] * lo[n + 2 * k];
            CHECK(std::abs(acc - (k == 0 ? 1.0 : 0.0)) < 1e-10);
        }
    }
}

TEST_CASE("out-of-range orders and bad names are rejected") {
    CHECK_THROWS_AS(WaveletSpec::parse("db0"), UnsupportedWavelet);
    CHECK_THROWS_AS(WaveletSpec::parse("db46"), UnsupportedWavelet);
    CHECK_THROWS_AS(WaveletSpec::parse("sym1"), UnsupportedWavelet);
    CHECK_THROWS_AS(WaveletSpec::parse("sym21"), UnsupportedWavelet);
    CHECK_THROWS_AS(WaveletSpec::parse("haar"), UnsupportedWavelet);
    CHECK_THROWS_AS(WaveletSpec::parse("db2x"), UnsupportedWavelet);
    CHECK_THROWS_AS(build_filters(WaveletSpec{WaveletFamily::db, 99}),
                    UnsupportedWavelet);
}

TEST_CASE("dwt2 of a constant 2x2 image concentrates into cA") {
    Mat img(2, 2, 100.0);
    const SubbandSet s = dwt2(img, WaveletSpec::parse("db1"));
    REQUIRE(s.cA.rows() == 1);
    REQUIRE(s.cA.cols() == 1);
    CHECK(s.cA.at(0, 0) == doctest::Approx(200.0).epsilon(1e-12));
    CHECK(std::abs(s.cH.at(0, 0)) < 1e-12);
    CHECK(std::abs(s.cV.at(0, 0)) < 1e-12);
    CHECK(std::abs(s.cD.at(0, 0)) < 1e-12);
}

TEST_CASE("dwt2 subband convention on [[1,2],[3,4]]") {
    Mat img(2, 2);
    img.at(0, 0) = 1;
    img.at(0, 1) = 2;
    img.at(1, 0) = 3;
    img.at(1, 1) = 4;
    const SubbandSet s = dwt2(img, WaveletSpec::parse("db1"));
    CHECK(s.cA.at(0, 0) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(s.cH.at(0, 0) == doctest::Approx(-2.0).epsilon(1e-12));  // row detail
    CHECK(s.cV.at(0, 0) == doctest::Approx(-1.0).epsilon(1e-12));  // col detail
    CHECK(std::abs(s.cD.at(0, 0)) < 1e-12);
}

TEST_CASE("idwt2 inverts the constant-image example") {
    SubbandSet s;
    s.cA = Mat(1, 1, 200.0);
    s.cH = Mat(1, 1, 0.0);
    s.cV = Mat(1, 1, 0.0);
    s.cD = Mat(1, 1, 0.0);
    s.original_rows = 2;
    s.original_cols = 2;
    const Mat img = idwt2(s, WaveletSpec::parse("db1"));
    REQUIRE(img.rows() == 2);
    REQUIRE(img.cols() == 2);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            CHECK(img.at(r, c) == doctest::Approx(100.0).epsilon(1e-12));
}

TEST_CASE("zero bands reconstruct to the zero image") {
    SubbandSet s;
    s.cA = Mat(4, 4, 0.0);
    s.cH = Mat(4, 4, 0.0);
    s.cV = Mat(4, 4, 0.0);
    s.cD = Mat(4, 4, 0.0);
    s.original_rows = 8;
    s.original_cols = 7;  // odd columns get cropped
    const Mat img = idwt2(s, WaveletSpec::parse("db3"));
    REQUIRE(img.rows() == 8);
    REQUIRE(img.cols() == 7);
    for (double v : img.data()) CHECK(v == 0.0);
}

TEST_CASE("perfect reconstruction across sizes and wavelets") {
    const char* names[] = {"db1", "db2", "db6", "db28", "sym4", "sym9"};
    const std::pair<int, int> sizes[] = {{16, 16}, {17, 23}, {64, 64},
                                         {33, 47}, {31, 32}};
    std::uint32_t seed = 7;
    for (const char* name : names) {
        const WaveletSpec spec = WaveletSpec::parse(name);
        for (auto [r, c] : sizes) {
            CAPTURE(name);
            CAPTURE(r);
            CAPTURE(c);
            const Mat x = random_mat(r, c, seed++);
            const SubbandSet s = dwt2(x, spec);
            CHECK(s.cA.rows() == (r + 1) / 2);
            CHECK(s.cA.cols() == (c + 1) / 2);
            const Mat y = idwt2(s, spec);
            CHECK(max_abs_diff(x, y) < 1e-9);
        }
    }
}

TEST_CASE("orthogonality conserves energy on even sizes") {
    for (const char* name : {"db1", "db4", "sym7"}) {
        const WaveletSpec spec = WaveletSpec::parse(name);
        const Mat x = random_mat(32, 48, 11);
        const SubbandSet s = dwt2(x, spec);
        const double bands = sum_squares(s.cA) + sum_squares(s.cH) +
                             sum_squares(s.cV) + sum_squares(s.cD);
        const double input = sum_squares(x);
        CHECK(std::abs(bands - input) / input < 1e-6);
    }
}

TEST_CASE("dwt2 is linear") {
    const WaveletSpec spec = WaveletSpec::parse("db3");
    const Mat x = random_mat(24, 24, 21);
    const Mat y = random_mat(24, 24, 22);
    const double alpha = 1.75, beta = -0.5;
    Mat z(24, 24);
    for (std::size_t i = 0; i < z.data().size(); ++i)
        z.data()[i] = alpha * x.data()[i] + beta * y.data()[i];
    const SubbandSet sx = dwt2(x, spec);
    const SubbandSet sy = dwt2(y, spec);
    const SubbandSet sz = dwt2(z, spec);
    auto check_band = [&](const Mat& bx, const Mat& by, const Mat& bz) {
        for (std::size_t i = 0; i < bz.data().size(); ++i)
            CHECK(std::abs(bz.data()[i] - alpha * bx.data()[i] -
                           beta * by.data()[i]) < 1e-9);
    };
    check_band(sx.cA, sy.cA, sz.cA);
    check_band(sx.cH, sy.cH, sz.cH);
    check_band(sx.cV, sy.cV, sz.cV);
    check_band(sx.cD, sy.cD, sz.cD);
}

TEST_CASE("idwt2 rejects inconsistent bands") {
    SubbandSet s;
    s.cA = Mat(4, 4);
    s.cH = Mat(4, 3);
    s.cV = Mat(4, 4);
    s.cD = Mat(4, 4);
    s.original_rows = 8;
    s.original_cols = 8;
    CHECK_THROWS_AS(idwt2(s, WaveletSpec::parse("db1")), DimensionMismatch);

    SubbandSet t;
    t.cA = Mat(4, 4);
    t.cH = Mat(4, 4);
    t.cV = Mat(4, 4);
    t.cD = Mat(4, 4);
    t.original_rows = 11;  // not reachable from 4-row bands
    t.original_cols = 8;
    CHECK_THROWS_AS(idwt2(t, WaveletSpec::parse("db1")), DimensionMismatch);
}

TEST_CASE("filter length may exceed the signal length") {
    // 8x8 image, db28 has 56 taps; periodization must wrap repeatedly
    const WaveletSpec spec = WaveletSpec::parse("db28");
    const Mat x = random_mat(8, 8, 33);
    const Mat y = idwt2(dwt2(x, spec), spec);
    CHECK(max_abs_diff(x, y) < 1e-9);
}

TEST_SUITE_END();
