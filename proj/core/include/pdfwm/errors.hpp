#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdfwm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NonBinaryInput : Error {
    using Error::Error;
};

struct UnsupportedWavelet : Error {
    using Error::Error;
};

struct RegionTooSmall : Error {
    using Error::Error;
};

struct PlaneOutOfRange : Error {
    using Error::Error;
};

struct InvalidParams : Error {
    using Error::Error;
};

// Parse failure in a PDF document; offset is the byte position the parser
// was looking at when it gave up.
struct MalformedPdf : Error {
    MalformedPdf(const std::string& what, std::size_t at)
        : Error(what + " (at byte " + std::to_string(at) + ")"), offset(at) {}
    std::size_t offset = 0;
};

struct UnsupportedCodec : Error {
    using Error::Error;
};

struct DecodeError : Error {
    using Error::Error;
};

}  // namespace pdfwm
