#pragma once

#include <cstdint>
#include <vector>

#include "pdfwm/raster.hpp"

namespace pdfwm {

// Minimal lossless PNG writer: 8-bit gray or RGB, no interlacing, filter
// type None on every scanline. Byte-deterministic for a given image.
std::vector<std::uint8_t> png_encode(const RasterImage& img);

// Reader for 8-bit gray/RGB/gray+alpha/RGBA, non-interlaced; alpha channels
// are dropped. Palette, 16-bit and Adam7 inputs raise DecodeError.
RasterImage png_decode(const std::uint8_t* data, std::size_t size);

inline RasterImage png_decode(const std::vector<std::uint8_t>& data) {
    return png_decode(data.data(), data.size());
}

bool looks_like_png(const std::uint8_t* data, std::size_t size);

}  // namespace pdfwm
