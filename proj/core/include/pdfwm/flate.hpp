#pragma once

#include <cstdint>
#include <vector>

namespace pdfwm {

// zlib-wrapped deflate at a fixed level so identical inputs always produce
// identical bytes.
std::vector<std::uint8_t> zlib_deflate(const std::uint8_t* data,
                                       std::size_t size, int level = 9);
std::vector<std::uint8_t> zlib_inflate(const std::uint8_t* data,
                                       std::size_t size);

inline std::vector<std::uint8_t> zlib_deflate(
    const std::vector<std::uint8_t>& data, int level = 9) {
    return zlib_deflate(data.data(), data.size(), level);
}
inline std::vector<std::uint8_t> zlib_inflate(
    const std::vector<std::uint8_t>& data) {
    return zlib_inflate(data.data(), data.size());
}

}  // namespace pdfwm
