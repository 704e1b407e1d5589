// Acceptance suite: each criterion prints one PASS/FAIL line; the process
// exits nonzero if any criterion fails. Usage:
//     pdfwm_acceptance <corpus-dir>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "pdf_fixtures.hpp"
#include "pdfwm/freq_embed.hpp"
#include "pdfwm/metrics.hpp"
#include "pdfwm/pdf/document.hpp"
#include "pdfwm/spatial_embed.hpp"
#include "pdfwm/wavelet.hpp"
#include "synth_images.hpp"

using namespace pdfwm;
using testsupport::document_cover;
using testsupport::glyph_mark;
using testsupport::random_image;
using testsupport::random_pattern;
using testsupport::spearman;

namespace {

int failures = 0;

void report(int number, const char* title, bool pass,
            const std::string& detail) {
    std::printf("%s  criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", number,
                title, detail.c_str());
    if (!pass) ++failures;
}

Mat to_mat(const RasterImage& img) { return channel_to_mat(img, 0); }

// 1. perfect reconstruction over random images, odd sizes included
void criterion_reconstruction() {
    std::mt19937 rng(1001);
    const char* wavelets[] = {"db1", "db2", "db6", "sym4"};
    double worst = 0.0;
    int images = 0;
    for (int i = 0; i < 50; ++i) {
        const int w = 16 + static_cast<int>(rng() % 113);  // 16..128
        const int h = 16 + static_cast<int>(rng() % 113);
        const auto img = random_image(w, h, 1, rng());
        const Mat x = to_mat(img);
        ++images;
        for (const char* name : wavelets) {
            const WaveletSpec spec = WaveletSpec::parse(name);
            const Mat y = idwt2(dwt2(x, spec), spec);
            for (int r = 0; r < x.rows(); ++r)
                for (int c = 0; c < x.cols(); ++c)
                    worst = std::max(worst,
                                     std::abs(x.at(r, c) - y.at(r, c)));
        }
    }
    char detail[80];
    std::snprintf(detail, sizeof(detail),
                  "%d images x 4 wavelets, max abs error %.2e", images, worst);
    report(1, "perfect reconstruction", worst < 1e-9, detail);
}

// 2. spatial embed/detect round trip is exact
void criterion_spatial_roundtrip() {
    std::mt19937 rng(2002);
    int exact = 0;
    const int cases = 100;
    for (int i = 0; i < cases; ++i) {
        SpatialParams p;
        p.plane_v = 2 + static_cast<int>(rng() % 7);          // 2..8
        p.plane_u = 1 + static_cast<int>(rng() % (p.plane_v - 1));
        const int w = 8 + static_cast<int>(rng() % 57);
        const int h = 8 + static_cast<int>(rng() % 57);
        const auto cover = random_image(w, h, 1, rng());
        const auto mark = random_pattern(h, w, rng());
        const auto detected = detect_spatial(embed_spatial(cover, mark, p), p);
        if (hamming(mark, detected) == 0.0) ++exact;
    }
    report(2, "spatial zero-error round trip", exact == cases,
           std::to_string(exact) + "/" + std::to_string(cases) + " exact");
}

// 3. removal PSNR equals the analytic plane-weight law
void criterion_removal_psnr() {
    std::mt19937 rng(3003);
    bool ok = true;
    std::string detail;
    for (int u = 1; u <= 3; ++u) {
        SpatialParams p;
        p.plane_v = 7;
        p.plane_u = u;
        const auto cover = random_image(256, 256, 1, rng());
        const auto s = embed_spatial(cover, random_pattern(256, 256, rng()),
                                     p);
        const auto cr = remove_spatial(s, p);

        const auto bu = bitplane_get(cover, u);
        double set = 0;
        for (auto b : bu.bits) set += b;
        const double frac = set / static_cast<double>(bu.bits.size());
        const double weight = static_cast<double>(1 << (u - 1));
        const double expected =
            10.0 * std::log10(255.0 * 255.0 / (weight * weight * frac));
        const double measured = psnr(cover, cr);
        if (std::abs(measured - expected) > 0.01) ok = false;
        if (u == 1) {
            if (measured < 50.5 || measured > 51.5) ok = false;
            detail = "U=1 gives " + std::to_string(measured) + " dB";
        }
    }
    report(3, "removal PSNR law", ok, detail);
}

// 4. real-valued frequency pipeline is exact
void criterion_freq_exact() {
    std::mt19937 rng(4004);
    int exact = 0, cases = 0;
    for (const char* name : {"db1", "db2", "db6", "sym4"}) {
        for (double u : {0.3, 0.5, 1.0}) {
            for (double a : {10.0, 20.0, 100.0, 300.0}) {
                FreqParams p;
                p.wavelet = WaveletSpec::parse(name);
                p.fraction = u;
                p.brightness = a;
                const auto cover = random_image(64, 64, 1, rng());
                const RegionSpec region = select_region(32, 32, u, 1, 1);
                const auto mark =
                    random_pattern(region.row_count, 32, rng());
                const Mat stego =
                    embed_frequency_real(to_mat(cover), mark, p);
                const auto detected =
                    detect_frequency_real(stego, p, mark.rows, mark.cols);
                ++cases;
                if (hamming(mark, detected) == 0.0) ++exact;
            }
        }
    }
    report(4, "frequency no-quantization exactness", exact == cases,
           std::to_string(exact) + "/" + std::to_string(cases) + " exact");
}

// 5. after 8-bit storage, db1 beats db2 and db6 at a=20, u=0.5
void criterion_freq_ordering() {
    const char* wavelets[] = {"db1", "db2", "db6"};
    double mean[3] = {0, 0, 0};
    const int covers = 10;
    const auto mark = glyph_mark(24, 48, 5005);
    for (int i = 0; i < covers; ++i) {
        const auto cover =
            document_cover(192 + 8 * i, 144 + 4 * i, 5100u + i);
        for (int wi = 0; wi < 3; ++wi) {
            FreqParams p;
            p.wavelet = WaveletSpec::parse(wavelets[wi]);
            p.fraction = 0.5;
            p.brightness = 20.0;
            const auto stego = embed_frequency(cover, mark, p);
            const auto detected =
                detect_frequency(stego, p, mark.rows, mark.cols);
            mean[wi] += hamming(mark, detected) / covers;
        }
    }
    const bool pass = mean[0] < mean[1] && mean[0] < mean[2] &&
                      mean[0] < 0.05;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "mean ham db1=%.4f db2=%.4f db6=%.4f",
                  mean[0], mean[1], mean[2]);
    report(5, "post-quantization wavelet ordering", pass, buf);
}

// 6. degradation grows with brightness
void criterion_degradation_trend() {
    bool pass = true;
    std::string detail;
    for (const char* name : {"db1", "db6"}) {
        const auto cover = document_cover(192, 160, 6006);
        const auto mark = glyph_mark(24, 48, 6007);
        std::vector<double> as, hams;
        for (double a = 20.0; a <= 300.0; a += 20.0) {
            FreqParams p;
            p.wavelet = WaveletSpec::parse(name);
            p.fraction = 0.5;
            p.brightness = a;
            const auto stego = embed_frequency(cover, mark, p);
            as.push_back(a);
            hams.push_back(
                hamming(mark, detect_frequency(stego, p, mark.rows,
                                               mark.cols)));
        }
        const double rho = spearman(as, hams);
        detail += std::string(name) + " rho=" + std::to_string(rho) + " ";
        if (rho <= 0.0) pass = false;
    }
    report(6, "degradation trend", pass, detail);
}

// 7. converter reversibility over the committed corpus
void criterion_converter(const char* corpus_dir) {
    namespace fs = std::filesystem;
    int docs = 0, images = 0, passed = 0;
    std::string first_failure;
    if (corpus_dir && fs::is_directory(corpus_dir)) {
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(corpus_dir))
            if (e.path().extension() == ".pdf") files.push_back(e.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            std::ifstream in(f, std::ios::binary);
            std::vector<std::uint8_t> bytes(
                (std::istreambuf_iterator<char>(in)),
                std::istreambuf_iterator<char>());
            ++docs;
            for (const auto& r : pdf::roundtrip_check(bytes)) {
                ++images;
                if (r.supported && r.pass) {
                    ++passed;
                } else if (first_failure.empty()) {
                    first_failure = f.filename().string();
                }
            }
        }
    }
    const bool pass = docs >= 20 && images > 0 && passed == images;
    std::string detail = std::to_string(docs) + " documents, " +
                         std::to_string(passed) + "/" +
                         std::to_string(images) + " images byte-identical";
    if (!first_failure.empty()) detail += ", first failure " + first_failure;
    report(7, "converter reversibility", pass, detail);
}

// 8. rmse^2 == ham on binary pairs
void criterion_metric_identity() {
    std::mt19937 rng(8008);
    bool ok = true;
    for (int trial = 0; trial < 1000; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 16);
        const int c = 1 + static_cast<int>(rng() % 16);
        const auto a = random_pattern(r, c, rng());
        const auto b = random_pattern(r, c, rng());
        const double e = rmse(a, b);
        if (std::abs(e * e - hamming(a, b)) > 1e-12) ok = false;
    }
    int exhaustive = 0;
    for (int i = 0; i < 16; ++i) {
        for (int j = 0; j < 16; ++j) {
            auto a = BinaryPattern::make(2, 2);
            auto b = BinaryPattern::make(2, 2);
            for (int bit = 0; bit < 4; ++bit) {
                a.bits[bit] = (i >> bit) & 1;
                b.bits[bit] = (j >> bit) & 1;
            }
            const double e = rmse(a, b);
            if (std::abs(e * e - hamming(a, b)) <= 1e-12) ++exhaustive;
        }
    }
    report(8, "metric identity rmse^2 = ham", ok && exhaustive == 256,
           "1000 random pairs, " + std::to_string(exhaustive) +
               "/256 exhaustive 2x2 pairs");
}

}  // namespace

int main(int argc, char** argv) {
    criterion_reconstruction();
    criterion_spatial_roundtrip();
    criterion_removal_psnr();
    criterion_freq_exact();
    criterion_freq_ordering();
    criterion_degradation_trend();
    criterion_converter(argc > 1 ? argv[1] : nullptr);
    criterion_metric_identity();
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
