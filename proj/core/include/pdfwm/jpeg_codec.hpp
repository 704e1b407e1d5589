#pragma once

#include <cstdint>
#include <vector>

#include "pdfwm/raster.hpp"

namespace pdfwm {

// Baseline JPEG decode (gray or RGB output). Throws DecodeError.
RasterImage jpeg_decode(const std::uint8_t* data, std::size_t size);

inline RasterImage jpeg_decode(const std::vector<std::uint8_t>& data) {
    return jpeg_decode(data.data(), data.size());
}

// Baseline JPEG encode, used when synthesizing DCT-coded test documents.
std::vector<std::uint8_t> jpeg_encode(const RasterImage& img,
                                      int quality = 90);

}  // namespace pdfwm
