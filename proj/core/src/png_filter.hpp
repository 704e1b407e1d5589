#pragma once

#include <cstdint>
#include <vector>

namespace pdfwm::detail {

// Removes per-row PNG filtering: src holds rows of (1 filter byte +
// rowbytes data bytes); returns rows*rowbytes unfiltered bytes. bpp is the
// byte distance to the pixel to the left. Shared by the PNG reader and the
// PDF stream predictor. Throws DecodeError on unknown filter types or short
// input.
std::vector<std::uint8_t> png_defilter(const std::uint8_t* src,
                                       std::size_t size, std::size_t rowbytes,
                                       int bpp, std::size_t rows);

}  // namespace pdfwm::detail
