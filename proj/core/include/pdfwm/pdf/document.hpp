#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pdfwm/pdf/object.hpp"
#include "pdfwm/raster.hpp"

namespace pdfwm::pdf {

enum class ImageCodec { flate_raw, dct_jpeg, other };
enum class ImageColor { gray8, rgb24, other };

// Locator for one Image XObject as seen from a page. codec/colorspace
// describe what extract_image can do with it: anything outside the supported
// set is listed as `other` and skipped rather than mangled.
struct PdfImageRef {
    int page_index = 0;
    int object_num = 0;
    int object_gen = 0;
    ImageCodec codec = ImageCodec::other;
    ImageColor colorspace = ImageColor::other;
    int width = 0;
    int height = 0;
    int bits_per_component = 0;
};

const char* codec_name(ImageCodec c);
const char* colorspace_name(ImageColor c);

// A parsed PDF. The value is immutable once loaded; replace_image returns
// the bytes of a new document (incremental update appended to the original)
// and never touches this one.
class Document {
public:
    static Document load(std::vector<std::uint8_t> bytes);

    const std::vector<std::uint8_t>& bytes() const { return bytes_; }
    int page_count() const { return static_cast<int>(pages_.size()); }
    const std::vector<Ref>& pages() const { return pages_; }

    // One entry per Image XObject reachable from each page's resources
    // (including nested Form XObjects), ordered by (page, object number).
    std::vector<PdfImageRef> list_images() const;

    // Decoded 8-bit samples. Throws UnsupportedCodec for codec `other`,
    // DecodeError when the stream is damaged.
    RasterImage extract_image(const PdfImageRef& ref) const;

    // New document bytes with the image's stream rewritten as FlateDecode
    // raw samples via an incremental update. Image dimensions must match
    // the ref (DimensionMismatch) so page layout cannot reflow.
    std::vector<std::uint8_t> replace_image(const PdfImageRef& ref,
                                            const RasterImage& img) const;

    // low-level access
    const Object* object(int num) const;
    const Object& resolve(const Object& maybe_ref) const;
    const Dict& trailer() const { return trailer_; }
    bool uses_xref_stream() const { return xref_stream_; }
    std::uint64_t last_xref_offset() const { return last_xref_offset_; }
    int max_object_number() const;

private:
    std::vector<std::uint8_t> bytes_;
    std::map<int, std::pair<int, Object>> objects_;  // num -> (gen, object)
    Dict trailer_;
    std::vector<Ref> pages_;
    bool xref_stream_ = false;
    std::uint64_t last_xref_offset_ = 0;
};

struct RoundtripResult {
    PdfImageRef ref;
    bool supported = false;
    bool pass = false;
};

// extract -> replace -> extract -> replace -> extract per image; pass means
// all three extractions were pixel-identical. Unsupported images are
// reported with supported=false and do not fail the check.
std::vector<RoundtripResult> roundtrip_check(
    const std::vector<std::uint8_t>& pdf_bytes);

}  // namespace pdfwm::pdf
