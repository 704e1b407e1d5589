#pragma once

#include <string_view>
#include <vector>

#include "pdfwm/pdf/object.hpp"

namespace pdfwm::pdf {

void append_bytes(std::vector<std::uint8_t>& out, std::string_view s);

// Writes the object in PDF syntax (no surrounding "obj"/"endobj").
void serialize_object(const Object& obj, std::vector<std::uint8_t>& out);

// Full indirect object: "num gen obj ... endobj\n".
void serialize_indirect(int num, int gen, const Object& obj,
                        std::vector<std::uint8_t>& out);

}  // namespace pdfwm::pdf
