#pragma once

#include <optional>
#include <string>

#include "pdfwm/raster.hpp"

namespace pdfwm {

// Relative number of differing bits, in [0,1]. Throws DimensionMismatch /
// NonBinaryInput.
double hamming(const BinaryPattern& a, const BinaryPattern& b);

double rmse(const RasterImage& a, const RasterImage& b);
double rmse(const BinaryPattern& a, const BinaryPattern& b);

// 10*log10(peak^2/MSE); +infinity when the images are identical.
double psnr(const RasterImage& a, const RasterImage& b, double peak = 255.0);

// Kullback-Leibler divergence KL(hist(a) || hist(b)) over 256-bin intensity
// histograms (all channels pooled), in nats. Both histograms receive
// additive smoothing eps = 1/(pixel_count*bins) so the divergence is always
// finite; it is zero exactly when the smoothed histograms coincide.
double relative_entropy(const RasterImage& a, const RasterImage& b,
                        int bins = 256);

// Measurement bundle between an original and a distorted artifact. Fields
// are present when they apply to the compared pair (ham only for binary
// patterns). Serializes to flat key-value text and to JSON; an infinite
// psnr becomes the string "inf" in both.
struct DistortionReport {
    std::optional<double> ham;
    std::optional<double> rmse;
    std::optional<double> psnr;
    std::optional<double> relent;

    std::string to_text() const;
    std::string to_json() const;
};

DistortionReport compare_marks(const BinaryPattern& original,
                               const BinaryPattern& extracted);
DistortionReport compare_images(const RasterImage& original,
                                const RasterImage& distorted);

}  // namespace pdfwm
