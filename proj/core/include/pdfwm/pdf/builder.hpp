#pragma once

#include <cstdint>
#include <vector>

#include "pdfwm/pdf/object.hpp"

namespace pdfwm::pdf {

// Writes a PDF from scratch: add objects, then build() assembles header,
// body, cross-reference and trailer. Object numbers are handed out
// sequentially from 1; generation is always 0.
class DocumentBuilder {
public:
    // Allocates an object number to be filled in later (parent/child links).
    Ref reserve();
    Ref add(Object obj);
    void set(const Ref& ref, Object obj);

    // Stream object; /Length is set from the data automatically.
    Ref add_stream(Dict dict, std::vector<std::uint8_t> raw);

    // use_xref_stream selects a cross-reference stream instead of a classic
    // table; pack_objstm additionally moves every non-stream object into one
    // object stream (this forces the cross-reference stream form).
    std::vector<std::uint8_t> build(const Ref& root,
                                    bool use_xref_stream = false,
                                    bool pack_objstm = false) const;

private:
    std::vector<Object> objects_;
};

}  // namespace pdfwm::pdf
