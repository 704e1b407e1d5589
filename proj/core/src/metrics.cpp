#include "pdfwm/metrics.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <limits>

#include "pdfwm/errors.hpp"

namespace pdfwm {

namespace {

std::array<double, 256> histogram(const RasterImage& img) {
    std::array<double, 256> h{};
    for (std::uint8_t v : img.pixels) h[v] += 1.0;
    const double total = static_cast<double>(img.pixels.size());
    for (double& x : h) x /= total;
    return h;
}

double mse(const RasterImage& a, const RasterImage& b) {
    if (!a.same_dims(b))
        throw DimensionMismatch("images differ in dimensions");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.pixels.size(); ++i) {
        const double d = static_cast<double>(a.pixels[i]) - b.pixels[i];
        acc += d * d;
    }
    return acc / static_cast<double>(a.pixels.size());
}

void append_value(std::string& out, double v) {
    if (std::isinf(v)) {
        out += "inf";
        return;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    out += buf;
}

}  // namespace

double hamming(const BinaryPattern& a, const BinaryPattern& b) {
    if (!a.same_dims(b))
        throw DimensionMismatch("patterns differ in dimensions");
    std::size_t errors = 0;
    for (std::size_t i = 0; i < a.bits.size(); ++i) {
        if (a.bits[i] > 1 || b.bits[i] > 1)
            throw NonBinaryInput("pattern contains values outside {0,1}");
        errors += a.bits[i] != b.bits[i];
    }
    return static_cast<double>(errors) / static_cast<double>(a.bits.size());
}

double rmse(const RasterImage& a, const RasterImage& b) {
    return std::sqrt(mse(a, b));
}

double rmse(const BinaryPattern& a, const BinaryPattern& b) {
    if (!a.same_dims(b))
        throw DimensionMismatch("patterns differ in dimensions");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.bits.size(); ++i) {
        const double d = static_cast<double>(a.bits[i]) - b.bits[i];
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(a.bits.size()));
}

double psnr(const RasterImage& a, const RasterImage& b, double peak) {
    const double m = mse(a, b);
    if (m == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(peak * peak / m);
}

double relative_entropy(const RasterImage& a, const RasterImage& b, int bins) {
    if (bins != 256)
        throw InvalidParams("only 256-bin histograms are supported");
    const auto p = histogram(a);
    const auto q = histogram(b);
    const double eps = 1.0 / (static_cast<double>(a.pixels.size()) * bins);
    const double norm = 1.0 + bins * eps;
    double kl = 0.0;
    for (int i = 0; i < bins; ++i) {
        const double pi = (p[i] + eps) / norm;
        const double qi = (q[i] + eps) / norm;
        kl += pi * std::log(pi / qi);
    }
    return kl < 0.0 ? 0.0 : kl;  // clip the tiny negative rounding residue
}

std::string DistortionReport::to_text() const {
    std::string out;
    auto line = [&out](const char* key, const std::optional<double>& v) {
        if (!v) return;
        out += key;
        out += " = ";
        append_value(out, *v);
        out += '\n';
    };
    line("ham", ham);
    line("rmse", rmse);
    line("psnr", psnr);
    line("relent", relent);
    return out;
}

std::string DistortionReport::to_json() const {
    std::string out = "{";
    bool first = true;
    auto field = [&](const char* key, const std::optional<double>& v) {
        if (!v) return;
        if (!first) out += ", ";
        first = false;
        out += '"';
        out += key;
        out += "\": ";
        if (std::isinf(*v)) {
            out += "\"inf\"";
        } else {
            append_value(out, *v);
        }
    };
    field("ham", ham);
    field("rmse", rmse);
    field("psnr", psnr);
    field("relent", relent);
    out += "}";
    return out;
}

DistortionReport compare_marks(const BinaryPattern& original,
                               const BinaryPattern& extracted) {
    DistortionReport r;
    r.ham = hamming(original, extracted);
    r.rmse = rmse(original, extracted);
    r.relent = relative_entropy(pattern_to_image(original),
                                pattern_to_image(extracted));
    return r;
}

DistortionReport compare_images(const RasterImage& original,
                                const RasterImage& distorted) {
    DistortionReport r;
    r.rmse = rmse(original, distorted);
    r.psnr = psnr(original, distorted);
    r.relent = relative_entropy(original, distorted);
    return r;
}

}  // namespace pdfwm
