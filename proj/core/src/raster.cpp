#include "pdfwm/raster.hpp"

#include <cmath>

#include "pdfwm/errors.hpp"

namespace pdfwm {

RasterImage RasterImage::make(int width, int height, int channels,
                              std::uint8_t fill) {
    if (width <= 0 || height <= 0 || (channels != 1 && channels != 3))
        throw InvalidParams("raster dimensions must be positive and channels 1 or 3");
    RasterImage img;
    img.width = width;
    img.height = height;
    img.channels = channels;
    img.pixels.assign(static_cast<std::size_t>(width) * height * channels,
                      fill);
    return img;
}

BinaryPattern BinaryPattern::make(int rows, int cols, std::uint8_t fill) {
    if (rows <= 0 || cols <= 0)
        throw InvalidParams("pattern dimensions must be positive");
    BinaryPattern p;
    p.rows = rows;
    p.cols = cols;
    p.bits.assign(static_cast<std::size_t>(rows) * cols, fill ? 1 : 0);
    return p;
}

BinaryPattern resample_nearest(const BinaryPattern& src, int rows, int cols) {
    if (src.rows <= 0 || src.cols <= 0)
        throw InvalidParams("cannot resample an empty pattern");
    if (rows <= 0 || cols <= 0)
        throw InvalidParams("resample target must be non-empty");
    if (rows == src.rows && cols == src.cols) return src;
    BinaryPattern out = BinaryPattern::make(rows, cols);
    for (int r = 0; r < rows; ++r) {
        int sr = static_cast<int>((r + 0.5) * src.rows / rows);
        if (sr >= src.rows) sr = src.rows - 1;
        for (int c = 0; c < cols; ++c) {
            int sc = static_cast<int>((c + 0.5) * src.cols / cols);
            if (sc >= src.cols) sc = src.cols - 1;
            out.at(r, c) = src.at(sr, sc);
        }
    }
    return out;
}

Mat channel_to_mat(const RasterImage& img, int channel) {
    if (channel < 0 || channel >= img.channels)
        throw InvalidParams("channel index out of range");
    Mat m(img.height, img.width);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            m.at(y, x) = img.at(x, y, channel);
    return m;
}

void mat_to_channel(const Mat& m, RasterImage& img, int channel) {
    if (m.rows() != img.height || m.cols() != img.width)
        throw DimensionMismatch("matrix does not match image dimensions");
    if (channel < 0 || channel >= img.channels)
        throw InvalidParams("channel index out of range");
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            double v = std::round(m.at(y, x));
            if (v < 0.0) v = 0.0;
            if (v > 255.0) v = 255.0;
            img.at(x, y, channel) = static_cast<std::uint8_t>(v);
        }
    }
}

RasterImage pattern_to_image(const BinaryPattern& p, std::uint8_t zero,
                             std::uint8_t one) {
    RasterImage img = RasterImage::make(p.cols, p.rows, 1);
    for (int r = 0; r < p.rows; ++r)
        for (int c = 0; c < p.cols; ++c)
            img.at(c, r) = p.at(r, c) ? one : zero;
    return img;
}

BinaryPattern image_to_pattern(const RasterImage& img,
                               std::uint8_t threshold) {
    BinaryPattern p = BinaryPattern::make(img.height, img.width);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            p.at(y, x) = img.at(x, y, 0) >= threshold ? 1 : 0;
    return p;
}

}  // namespace pdfwm
