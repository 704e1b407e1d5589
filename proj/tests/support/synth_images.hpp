#pragma once

#include <cstdint>
#include <vector>

#include "pdfwm/raster.hpp"

namespace testsupport {

// Deterministic page-like cover: saturated white paper, glyph-ish dark
// blobs, a thin black rule. The white ground matters: it is where 8-bit
// clipping bites during frequency embedding, which separates the wavelet
// families just like on scanned document pages.
pdfwm::RasterImage document_cover(int width, int height, std::uint32_t seed,
                                  int channels = 1);

// Photo-like cover: dark ground, smooth bright blobs, mild grain. Broad
// histogram without the document cover's saturated paper.
pdfwm::RasterImage photo_cover(int width, int height, std::uint32_t seed,
                               int channels = 1);

// Blocky binary pattern resembling a logo watermark, roughly 35% ones.
pdfwm::BinaryPattern glyph_mark(int rows, int cols, std::uint32_t seed);

pdfwm::RasterImage random_image(int width, int height, int channels,
                                std::uint32_t seed);
pdfwm::BinaryPattern random_pattern(int rows, int cols, std::uint32_t seed,
                                    double ones_fraction = 0.5);

// Spearman rank correlation with average ranks on ties.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace testsupport
