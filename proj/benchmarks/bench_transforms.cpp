// Transform and embedding throughput across image sizes and filter lengths.
#include <benchmark/benchmark.h>

#include <random>

#include "pdfwm/freq_embed.hpp"
#include "pdfwm/spatial_embed.hpp"
#include "pdfwm/wavelet.hpp"

using namespace pdfwm;

namespace {

Mat random_mat(int n, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, 255.0);
    Mat m(n, n);
    for (auto& v : m.data()) v = dist(rng);
    return m;
}

RasterImage random_image(int n, std::uint32_t seed) {
    std::mt19937 rng(seed);
    RasterImage img = RasterImage::make(n, n, 1);
    for (auto& px : img.pixels) px = static_cast<std::uint8_t>(rng());
    return img;
}

BinaryPattern random_mark(int n, std::uint32_t seed) {
    std::mt19937 rng(seed);
    BinaryPattern p = BinaryPattern::make(n, n);
    for (auto& b : p.bits) b = rng() & 1;
    return p;
}

}  // namespace

static void BM_Dwt2(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const WaveletSpec spec{WaveletFamily::db, static_cast<int>(state.range(1))};
    const Mat img = random_mat(n, 1);
    for (auto _ : state) {
        SubbandSet s = dwt2(img, spec);
        benchmark::DoNotOptimize(s.cD.data().data());
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_Dwt2)
    ->Args({256, 1})
    ->Args({256, 6})
    ->Args({256, 28})
    ->Args({1024, 1})
    ->Args({1024, 6});

static void BM_Idwt2(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const WaveletSpec spec{WaveletFamily::db, static_cast<int>(state.range(1))};
    const SubbandSet s = dwt2(random_mat(n, 2), spec);
    for (auto _ : state) {
        Mat img = idwt2(s, spec);
        benchmark::DoNotOptimize(img.data().data());
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_Idwt2)->Args({256, 1})->Args({256, 6})->Args({1024, 1});

static void BM_EmbedFrequency(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const RasterImage cover = random_image(n, 3);
    const BinaryPattern mark = random_mark(n / 4, 4);
    FreqParams p;
    p.wavelet = WaveletSpec{WaveletFamily::db, 1};
    for (auto _ : state) {
        RasterImage stego = embed_frequency(cover, mark, p);
        benchmark::DoNotOptimize(stego.pixels.data());
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_EmbedFrequency)->Arg(256)->Arg(512);

static void BM_DetectFrequency(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    FreqParams p;
    p.wavelet = WaveletSpec{WaveletFamily::db, 1};
    const RasterImage stego =
        embed_frequency(random_image(n, 5), random_mark(n / 4, 6), p);
    for (auto _ : state) {
        BinaryPattern m = detect_frequency(stego, p, n / 4, n / 4);
        benchmark::DoNotOptimize(m.bits.data());
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_DetectFrequency)->Arg(256)->Arg(512);

static void BM_EmbedSpatial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const RasterImage cover = random_image(n, 7);
    const BinaryPattern mark = random_mark(n, 8);
    SpatialParams p;
    for (auto _ : state) {
        RasterImage stego = embed_spatial(cover, mark, p);
        benchmark::DoNotOptimize(stego.pixels.data());
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_EmbedSpatial)->Arg(256)->Arg(1024);

static void BM_DetectSpatial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SpatialParams p;
    const RasterImage stego =
        embed_spatial(random_image(n, 9), random_mark(n, 10), p);
    for (auto _ : state) {
        BinaryPattern m = detect_spatial(stego, p);
        benchmark::DoNotOptimize(m.bits.data());
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_DetectSpatial)->Arg(256)->Arg(1024);

BENCHMARK_MAIN();
