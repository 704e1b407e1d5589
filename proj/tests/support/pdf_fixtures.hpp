#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pdfwm/pdf/builder.hpp"
#include "pdfwm/raster.hpp"

namespace testsupport {

enum class ImgEnc { flate, flate_predictor, identity, jpeg };

struct PageSpec {
    std::vector<std::pair<pdfwm::RasterImage, ImgEnc>> images;
    bool via_form = false;  // reference images through a Form XObject
};

// Image XObject with the requested encoding.
pdfwm::pdf::Ref add_image_xobject(pdfwm::pdf::DocumentBuilder& b,
                                  const pdfwm::RasterImage& img, ImgEnc enc);

std::vector<std::uint8_t> make_pdf(const std::vector<PageSpec>& pages,
                                   bool use_xref_stream = false,
                                   bool pack_objstm = false);

// One page, one image.
std::vector<std::uint8_t> simple_pdf(const pdfwm::RasterImage& img,
                                     ImgEnc enc = ImgEnc::flate,
                                     bool use_xref_stream = false,
                                     bool pack_objstm = false);

// The reversibility corpus: >= 20 deterministic documents covering gray/RGB,
// classic and stream xref, object streams, predictors, DCT, multi-page,
// shared and nested images. Pairs of (file name, bytes).
std::vector<std::pair<std::string, std::vector<std::uint8_t>>> build_corpus();

}  // namespace testsupport
