#include "pdfwm/flate.hpp"

#include <zlib.h>

#include "pdfwm/errors.hpp"

namespace pdfwm {

std::vector<std::uint8_t> zlib_deflate(const std::uint8_t* data,
                                       std::size_t size, int level) {
    uLongf bound = compressBound(static_cast<uLong>(size));
    std::vector<std::uint8_t> out(bound);
    int rc = compress2(out.data(), &bound, data, static_cast<uLong>(size),
                       level);
    if (rc != Z_OK) throw DecodeError("deflate failed: zlib rc " +
                                      std::to_string(rc));
    out.resize(bound);
    return out;
}

std::vector<std::uint8_t> zlib_inflate(const std::uint8_t* data,
                                       std::size_t size) {
    z_stream zs{};
    if (inflateInit(&zs) != Z_OK) throw DecodeError("inflateInit failed");
    zs.next_in = const_cast<Bytef*>(data);
    zs.avail_in = static_cast<uInt>(size);

    std::vector<std::uint8_t> out;
    out.reserve(size * 3 + 64);
    std::uint8_t buf[1 << 15];
    int rc = Z_OK;
    while (rc != Z_STREAM_END) {
        zs.next_out = buf;
        zs.avail_out = sizeof(buf);
        rc = inflate(&zs, Z_NO_FLUSH);
        if (rc != Z_OK && rc != Z_STREAM_END) {
            inflateEnd(&zs);
            throw DecodeError("inflate failed: zlib rc " + std::to_string(rc));
        }
        out.insert(out.end(), buf, buf + (sizeof(buf) - zs.avail_out));
        if (rc == Z_OK && zs.avail_out != 0 && zs.avail_in == 0) {
            inflateEnd(&zs);
            throw DecodeError("inflate: truncated stream");
        }
    }
    inflateEnd(&zs);
    return out;
}

}  // namespace pdfwm
