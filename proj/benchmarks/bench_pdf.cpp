// Parse/extract/replace throughput on synthesized documents.
#include <benchmark/benchmark.h>

#include <random>

#include "pdfwm/flate.hpp"
#include "pdfwm/pdf/builder.hpp"
#include "pdfwm/pdf/document.hpp"
#include "pdfwm/png_codec.hpp"

using namespace pdfwm;
using namespace pdfwm::pdf;

namespace {

RasterImage noise_image(int n, std::uint32_t seed) {
    std::mt19937 rng(seed);
    RasterImage img = RasterImage::make(n, n, 1);
    for (auto& px : img.pixels) px = static_cast<std::uint8_t>(rng());
    return img;
}

std::vector<std::uint8_t> one_image_pdf(const RasterImage& img) {
    DocumentBuilder b;
    const Ref pages = b.reserve();
    Dict id;
    id.set("Type", Object(Name{"XObject"}));
    id.set("Subtype", Object(Name{"Image"}));
    id.set("Width", Object(static_cast<std::int64_t>(img.width)));
    id.set("Height", Object(static_cast<std::int64_t>(img.height)));
    id.set("ColorSpace", Object(Name{"DeviceGray"}));
    id.set("BitsPerComponent", Object(static_cast<std::int64_t>(8)));
    id.set("Filter", Object(Name{"FlateDecode"}));
    const Ref image = b.add_stream(std::move(id), zlib_deflate(img.pixels));
    Dict xo;
    xo.set("Im1", Object(image));
    Dict res;
    res.set("XObject", Object(std::move(xo)));
    Dict page;
    page.set("Type", Object(Name{"Page"}));
    page.set("Parent", Object(pages));
    page.set("Resources", Object(std::move(res)));
    const Ref pref = b.add(Object(std::move(page)));
    Dict tree;
    tree.set("Type", Object(Name{"Pages"}));
    Array kids;
    kids.push(Object(pref));
    tree.set("Kids", Object(std::move(kids)));
    tree.set("Count", Object(static_cast<std::int64_t>(1)));
    b.set(pages, Object(std::move(tree)));
    Dict cat;
    cat.set("Pages", Object(pages));
    return b.build(b.add(Object(std::move(cat))));
}

}  // namespace

static void BM_DocumentLoad(benchmark::State& state) {
    const auto bytes = one_image_pdf(noise_image(
        static_cast<int>(state.range(0)), 1));
    for (auto _ : state) {
        Document doc = Document::load(bytes);
        benchmark::DoNotOptimize(doc.page_count());
    }
    state.SetBytesProcessed(state.iterations() *
                            static_cast<std::int64_t>(bytes.size()));
}
BENCHMARK(BM_DocumentLoad)->Arg(128)->Arg(512);

static void BM_ExtractImage(benchmark::State& state) {
    const Document doc = Document::load(one_image_pdf(noise_image(
        static_cast<int>(state.range(0)), 2)));
    const auto ref = doc.list_images().at(0);
    for (auto _ : state) {
        RasterImage img = doc.extract_image(ref);
        benchmark::DoNotOptimize(img.pixels.data());
    }
}
BENCHMARK(BM_ExtractImage)->Arg(128)->Arg(512);

static void BM_ReplaceImage(benchmark::State& state) {
    const Document doc = Document::load(one_image_pdf(noise_image(
        static_cast<int>(state.range(0)), 3)));
    const auto ref = doc.list_images().at(0);
    const RasterImage img = doc.extract_image(ref);
    for (auto _ : state) {
        auto bytes = doc.replace_image(ref, img);
        benchmark::DoNotOptimize(bytes.data());
    }
}
BENCHMARK(BM_ReplaceImage)->Arg(128)->Arg(512);

static void BM_PngEncode(benchmark::State& state) {
    const RasterImage img = noise_image(static_cast<int>(state.range(0)), 4);
    for (auto _ : state) {
        auto bytes = png_encode(img);
        benchmark::DoNotOptimize(bytes.data());
    }
}
BENCHMARK(BM_PngEncode)->Arg(256)->Arg(1024);

static void BM_PngDecode(benchmark::State& state) {
    const auto bytes = png_encode(noise_image(
        static_cast<int>(state.range(0)), 5));
    for (auto _ : state) {
        RasterImage img = png_decode(bytes);
        benchmark::DoNotOptimize(img.pixels.data());
    }
}
BENCHMARK(BM_PngDecode)->Arg(256)->Arg(1024);
