#pragma once

#include <cstdint>
#include <vector>

#include "pdfwm/mat.hpp"

namespace pdfwm {

// 8-bit raster image, row-major, channel-interleaved. channels is 1 (gray)
// or 3 (RGB).
struct RasterImage {
    int width = 0;
    int height = 0;
    int channels = 1;
    std::vector<std::uint8_t> pixels;

    static RasterImage make(int width, int height, int channels,
                            std::uint8_t fill = 0);

    std::uint8_t& at(int x, int y, int c = 0) {
        return pixels[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    std::uint8_t at(int x, int y, int c = 0) const {
        return pixels[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }

    bool same_dims(const RasterImage& o) const {
        return width == o.width && height == o.height &&
               channels == o.channels;
    }
};

// Matrix over {0,1}: a watermark, an extracted watermark, or a bit plane.
struct BinaryPattern {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> bits;  // values 0 or 1

    static BinaryPattern make(int rows, int cols, std::uint8_t fill = 0);

    std::uint8_t& at(int r, int c) {
        return bits[static_cast<std::size_t>(r) * cols + c];
    }
    std::uint8_t at(int r, int c) const {
        return bits[static_cast<std::size_t>(r) * cols + c];
    }

    bool same_dims(const BinaryPattern& o) const {
        return rows == o.rows && cols == o.cols;
    }
};

// Nearest-neighbor resampling with pixel-center alignment. Upsampling
// followed by downsampling back to the source size is lossless, which the
// embed/detect round trip relies on.
BinaryPattern resample_nearest(const BinaryPattern& src, int rows, int cols);

// Channel <-> matrix bridges. mat_to_channel clamps to [0,255] and rounds
// to nearest, the storage step of every 8-bit pipeline.
Mat channel_to_mat(const RasterImage& img, int channel);
void mat_to_channel(const Mat& m, RasterImage& img, int channel);

// Binary pattern rendered as a gray image with the given levels (detected
// marks are written out this way).
RasterImage pattern_to_image(const BinaryPattern& p, std::uint8_t zero = 0,
                             std::uint8_t one = 255);

// Threshold a gray/color image into a binary pattern (>= threshold -> 1).
// Color images are thresholded on the first channel.
BinaryPattern image_to_pattern(const RasterImage& img,
                               std::uint8_t threshold = 128);

}  // namespace pdfwm
